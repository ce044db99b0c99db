#include "tropid/enumeration.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "tropid/geometry.hpp"
#include "tropid/identity.hpp"
#include "tropid/io.hpp"
#include "tropid/parallel.hpp"
#include "tropid/signature.hpp"

namespace tropid {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w.letters()) h = (h ^ l) * 0x100000001b3ULL;
    return h;
  }
};

Word repeat(std::string_view piece, int times) {
  std::string s;
  for (int i = 0; i < times; ++i) s += piece;
  return s.empty() ? Word({}, 2) : parse_word(s, 2);
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Letter> letters;
  for (const Word& p : parts) letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  return Word(std::move(letters), 2);
}

// Splits an interval into its ~n classes (n >= 3). Only classes of size >= 2
// are returned. Words are bucketed by hull fingerprints of their degree
// 2..n-1 supports; exact comparison happens only inside a bucket.
std::vector<std::vector<Word>> split_interval(const ClassInterval& ci, int n) {
  const std::vector<Word> words = interval_words(ci);
  std::vector<std::vector<PointSet>> supports(words.size());
  std::map<std::vector<Coord>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::vector<Coord> key;
    for (int d = 2; d < n; ++d) {
      for (PointSet& s : degree_supports(words[i], d)) {
        const auto f = hull_fingerprint(s);
        key.push_back(static_cast<Coord>(f.size()));
        key.insert(key.end(), f.begin(), f.end());
        supports[i].push_back(std::move(s));
      }
    }
    buckets[key].push_back(i);
  }
  auto same = [&](std::size_t x, std::size_t y) {
    for (std::size_t e = 0; e < supports[x].size(); ++e) {
      if (!hulls_equal(supports[x][e], supports[y][e])) return false;
    }
    return true;
  };
  std::vector<std::vector<Word>> out;
  for (const auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i : members) {
      auto g = std::find_if(groups.begin(), groups.end(), [&](const auto& grp) { return same(grp.front(), i); });
      if (g == groups.end()) groups.push_back({i});
      else g->push_back(i);
    }
    for (const auto& g : groups) {
      if (g.size() < 2) continue;
      std::vector<Word> cls;
      for (std::size_t i : g) cls.push_back(words[i]);
      out.push_back(std::move(cls));
    }
  }
  return out;
}

using PairList = std::vector<std::pair<Word, Word>>;

void add_class_pairs(const std::vector<Word>& cls, PairList& out) {
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) out.emplace_back(std::min(cls[i], cls[j]), std::max(cls[i], cls[j]));
  }
}

// Identities with content (la, length - la).
PairList search_content(int la, int lb, int n, int threads) {
  const auto intervals = list_classes_2(la, lb);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].min_word != intervals[i].max_word) open.push_back(i);
  }
  std::vector<PairList> found(open.size());
  parallel_for(open.size(), threads, [&](std::size_t t) {
    const ClassInterval& ci = intervals[open[t]];
    if (n == 2) {
      add_class_pairs(interval_words(ci), found[t]);
      return;
    }
    for (const auto& cls : split_interval(ci, n)) add_class_pairs(cls, found[t]);
  });
  PairList out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

nlohmann::json pairs_json(const PairList& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, v] : pairs) arr.push_back({w.str(), v.str()});
  return arr;
}

}  // namespace

ClassTable list_classes_general(const Content& c, int n, int threads) {
  if (n < 2) throw std::invalid_argument("list_classes_general: n must be at least 2");
  if (c.total() < 1) throw std::invalid_argument("list_classes_general: empty content");
  const auto words = words_with_content(c);
  std::vector<std::string> keys(words.size());
  parallel_for(words.size(), resolve_threads(threads), [&](std::size_t i) { keys[i] = signature_key(utn_signature(words[i], n)); });
  std::map<std::string, std::vector<Word>> buckets;
  for (std::size_t i = 0; i < words.size(); ++i) buckets[keys[i]].push_back(words[i]);
  ClassTable table;
  for (auto& [key, cls] : buckets) table.push_back(std::move(cls));
  for (auto& cls : table) std::sort(cls.begin(), cls.end());
  std::sort(table.begin(), table.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return table;
}

std::vector<Word> equivalence_class_general(const Word& w, int n) {
  IdentityChecker checker(w, n);
  std::vector<Word> out;
  for (const Word& v : words_with_content(content(w))) {
    if (checker.equivalent(v)) out.push_back(v);
  }
  return out;
}

std::vector<ClassInterval> list_classes_2(int la, int lb) {
  if (la < 0 || lb < 0 || la + lb == 0) throw std::invalid_argument("list_classes_2: need a nonempty content");
  std::unordered_set<Word, WordHash> minima;
  std::vector<ClassInterval> out;
  std::vector<Letter> start(static_cast<std::size_t>(la), Letter{0});
  start.insert(start.end(), static_cast<std::size_t>(lb), Letter{1});
  std::vector<Word> wlist{Word(std::move(start), 2)};
  std::unordered_set<Word, WordHash> queued(wlist.begin(), wlist.end());
  while (!wlist.empty()) {
    std::vector<Word> next;
    for (const Word& w : wlist) {
      ClassInterval ci = minmax(w);
      if (!minima.insert(ci.min_word).second) continue;
      // upward swaps ("ab" -> "ba") from every word of the class
      for_each_interval_word(ci, [&](const Word& x) {
        std::vector<Letter> letters(x.letters().begin(), x.letters().end());
        for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
          if (letters[k] != 0 || letters[k + 1] != 1) continue;
          std::swap(letters[k], letters[k + 1]);
          Word up(letters, 2);
          if (!interval_contains(ci, up) && queued.insert(up).second) next.push_back(std::move(up));
          std::swap(letters[k], letters[k + 1]);
        }
        return true;
      });
      out.push_back(std::move(ci));
    }
    wlist = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.min_word < y.min_word; });
  return out;
}

std::vector<Word> equivalence_class_n(const Word& w, int n) {
  if (n < 2) throw std::invalid_argument("equivalence_class_n: n must be at least 2");
  if (w.alphabet_size() != 2) return equivalence_class_general(w, n);
  const ClassInterval ci = minmax(w);
  if (n == 2) return interval_words(ci);
  IdentityChecker checker(w, n);
  std::vector<Word> out;
  for_each_interval_word(ci, [&](const Word& v) {
    if (checker.equivalent(v)) out.push_back(v);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Word, Word>> pair_orbit(const Word& w, const Word& v) {
  std::vector<std::pair<Word, Word>> orbit;
  auto add = [&](const Word& x, const Word& y) { orbit.emplace_back(std::min(x, y), std::max(x, y)); };
  add(w, v);
  add(reverse(w), reverse(v));
  add(dual(w), dual(v));
  add(reverse(dual(w)), reverse(dual(v)));
  return orbit;
}

std::pair<Word, Word> canonical_pair(const Word& w, const Word& v) {
  auto orbit = pair_orbit(w, v);
  return *std::min_element(orbit.begin(), orbit.end());
}

std::vector<IdentityRecord> shortest_identity_search(int length, int n, const SearchOptions& options) {
  if (length < 1) throw std::invalid_argument("shortest_identity_search: length must be positive");
  if (n < 2) throw std::invalid_argument("shortest_identity_search: n must be at least 2");
  const int threads = resolve_threads(options.threads);
  std::map<int, PairList> done;

  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    std::ifstream in(options.checkpoint);
    nlohmann::json state = nlohmann::json::parse(in);
    if (state.value("length", -1) == length && state.value("n", -1) == n) {
      for (const auto& entry : state.at("contents")) {
        PairList pairs;
        for (const auto& p : entry.at("pairs")) pairs.emplace_back(parse_word(p[0].get<std::string>(), 2), parse_word(p[1].get<std::string>(), 2));
        done[entry.at("la").get<int>()] = std::move(pairs);
      }
      if (options.progress) options.progress("resumed " + std::to_string(done.size()) + " contents from checkpoint");
    }
  }

  auto save = [&] {
    if (options.checkpoint.empty()) return;
    nlohmann::json state{{"schema", "tropid.search-checkpoint/1"}, {"length", length}, {"n", n}};
    state["contents"] = nlohmann::json::array();
    for (const auto& [la, pairs] : done) state["contents"].push_back({{"la", la}, {"pairs", pairs_json(pairs)}});
    const std::string tmp = options.checkpoint + ".tmp";
    {
      std::ofstream out(tmp);
      out << state.dump() << '\n';
    }
    std::filesystem::rename(tmp, options.checkpoint);
  };

  for (int la = 0; 2 * la <= length; ++la) {
    if (done.count(la)) continue;
    done[la] = search_content(la, length - la, n, threads);
    save();
    if (options.progress) {
      options.progress("content (" + std::to_string(la) + "," + std::to_string(length - la) + "): " +
                       std::to_string(done[la].size()) + " identities");
    }
  }

  std::set<std::pair<Word, Word>> all;
  for (const auto& [la, pairs] : done) {
    for (const auto& [w, v] : pairs) {
      all.emplace(w, v);
      Word dw = dual(w), dv = dual(v);
      all.emplace(std::min(dw, dv), std::max(dw, dv));
    }
  }
  std::vector<IdentityRecord> out;
  for (const auto& [w, v] : all) {
    const bool canonical = canonical_pair(w, v) == std::make_pair(w, v);
    if (options.canonical_only && !canonical) continue;
    out.push_back({w, v, n, canonical});
  }
  return out;
}

Word catalan_word(int r, int k) {
  if (r < 2 || k < 2) throw std::invalid_argument("catalan family needs r, k >= 2");
  return concat({parse_word("a", 2), repeat("b", k), repeat("ab", r), repeat("a", k), parse_word("b", 2)});
}

Word catalan_min_word(int r, int k) {
  if (r < 2 || k < 2) throw std::invalid_argument("catalan family needs r, k >= 2");
  const Word head = concat({parse_word("a", 2), repeat("b", k)});
  const Word tail = concat({repeat("a", k), parse_word("b", 2)});
  if (r < k) return concat({head, repeat("a", r), repeat("b", r), tail});
  return concat({head, repeat("a", k), repeat("ba", r - k), repeat("b", k), tail});
}

BigCount catalan_formula(int r, int k) {
  using Real = boost::multiprecision::cpp_dec_float_50;
  const Real pi = boost::math::constants::pi<Real>();
  Real sum = 0;
  for (int j = 1; j <= (k + 1) / 2; ++j) {
    const Real t = pi * j / (k + 2);
    sum += pow(cos(t), 2 * r) * pow(sin(t), 2);
  }
  Real value = pow(Real(2), 2 * r + 2) / (k + 2) * sum;
  return BigCount(round(value));
}

CatalanFamily catalan_family(int r, int k) {
  CatalanFamily f;
  f.interval = minmax(catalan_word(r, k));
  f.size = class_size(f.interval);
  f.formula = catalan_formula(r, k);
  return f;
}

}  // namespace tropid
