#include "tropid/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tropid/enumeration.hpp"
#include "tropid/identity.hpp"
#include "tropid/parallel.hpp"
#include "tropid/rng.hpp"
#include "tropid/version.hpp"

namespace tropid {

double binomial_half_width(std::int64_t hits, std::int64_t samples) {
  if (samples <= 0) throw std::invalid_argument("binomial_half_width: no samples");
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(samples));
}

StatRow fraction_row(std::string experiment, std::string param, std::int64_t hits, std::int64_t samples,
                     std::uint64_t seed) {
  StatRow row;
  row.experiment = std::move(experiment);
  row.param = std::move(param);
  row.samples = samples;
  row.seed = seed;
  row.hits = hits;
  row.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  const double h = binomial_half_width(hits, samples);
  row.ci_low = std::max(0.0, row.estimate - h);
  row.ci_high = std::min(1.0, row.estimate + h);
  return row;
}

Word sample_word(const Content& c, std::mt19937_64& rng) {
  if (c.total() < 1) throw std::invalid_argument("sample_word: empty content");
  std::vector<Letter> letters;
  for (int i = 0; i < c.alphabet_size(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(c[i]), static_cast<Letter>(i));
  std::shuffle(letters.begin(), letters.end(), rng);
  return Word(std::move(letters), c.alphabet_size());
}

Word sample_word(const Content& c, std::uint64_t seed, std::uint64_t stream) {
  auto rng = stream_rng(seed, stream);
  return sample_word(c, rng);
}

StatRow isolated_fraction(const Content& c, int n, std::int64_t samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("isolated_fraction: samples must be positive");
  std::vector<char> isolated(static_cast<std::size_t>(samples), 0);
  parallel_for(isolated.size(), resolve_threads(threads), [&](std::size_t i) {
    isolated[i] = is_locally_isolated(sample_word(c, seed, i), n) ? 1 : 0;
  });
  const auto hits = std::count(isolated.begin(), isolated.end(), 1);
  return fraction_row("isolated_n" + std::to_string(n), c.str(), hits, samples, seed);
}

StatRow isolated_fraction_exhaustive(const Content& c, int n, int threads) {
  const auto words = words_with_content(c);
  std::vector<char> isolated(words.size(), 0);
  parallel_for(words.size(), resolve_threads(threads), [&](std::size_t i) {
    isolated[i] = is_locally_isolated(words[i], n) ? 1 : 0;
  });
  const auto hits = std::count(isolated.begin(), isolated.end(), 1);
  return fraction_row("isolated_exhaustive_n" + std::to_string(n), c.str(), hits,
                      static_cast<std::int64_t>(words.size()), 0);
}

NeighborRatioResult neighbor_ratio_ut3(int length, std::int64_t samples, std::uint64_t seed, int threads) {
  if (length < 2 || length % 2 != 0) throw std::invalid_argument("neighbor_ratio_ut3: length must be even");
  if (samples < 1) throw std::invalid_argument("neighbor_ratio_ut3: samples must be positive");
  const Content c(std::vector<int>{length / 2, length / 2});
  std::vector<NeighborRatio> all(static_cast<std::size_t>(samples));
  parallel_for(all.size(), resolve_threads(threads), [&](std::size_t i) {
    const Word w = sample_word(c, seed, i);
    IdentityChecker two(w, 2), three(w, 3);
    NeighborRatio r{i, 0, 0};
    for (const Word& u : neighbors(w)) {
      if (!two.equivalent(u)) continue;
      ++r.ut2;
      if (three.equivalent(u)) ++r.ut3;
    }
    all[i] = r;
  });
  NeighborRatioResult out;
  for (const auto& r : all) {
    if (r.ut2 == 0) ++out.skipped;
    else out.ratios.push_back(r);
  }
  return out;
}

double median_ratio(const NeighborRatioResult& r) {
  if (r.ratios.empty()) throw std::invalid_argument("median_ratio: no ratios");
  std::vector<double> v;
  for (const auto& x : r.ratios) v.push_back(static_cast<double>(x.ut3) / x.ut2);
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

std::vector<CompositionRow> class_composition(int length, int threads) {
  if (length < 2) throw std::invalid_argument("class_composition: length must be at least 2");
  std::vector<CompositionRow> rows(static_cast<std::size_t>(length + 1));
  parallel_for(rows.size(), resolve_threads(threads), [&](std::size_t i) {
    const int la = static_cast<int>(i), lb = length - la;
    CompositionRow row;
    row.la = la;
    row.lb = lb;
    for (const auto& ci : list_classes_2(la, lb)) {
      const BigCount s = class_size(ci);
      ++row.classes;
      row.words += s;
      if (s == 1) ++row.isoterms;
      else if (s == 2) ++row.twins;
      else ++row.larger;
    }
    row.class_ratio = static_cast<double>(row.classes) / row.words.convert_to<double>();
    rows[i] = std::move(row);
  });
  return rows;
}

LargestClass largest_class(int la, int lb) {
  LargestClass best{{}, 0};
  for (auto& ci : list_classes_2(la, lb)) {
    BigCount s = class_size(ci);
    if (s > best.size) best = {std::move(ci), std::move(s)};
  }
  return best;
}

std::string stats_csv(const std::vector<StatRow>& rows) {
  std::string out = std::string(kStatsCsvHeader) + "\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f", r.estimate, r.ci_low, r.ci_high);
    out += r.experiment + ",\"" + r.param + "\"," + buf + "," + std::to_string(r.samples) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

nlohmann::json stats_metadata(const std::string& experiment, const nlohmann::json& config) {
  return {{"schema", "tropid.stats-meta/1"},
          {"experiment", experiment},
          {"config", config},
          {"ci_method", "normal approximation to the binomial, 95%, z = 1.96"},
          {"rng", "mt19937_64 seeded by seed_seq(seed, sample index)"},
          {"version", kVersion}};
}

}  // namespace tropid
