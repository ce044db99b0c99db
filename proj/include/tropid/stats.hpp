#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropid/minmax.hpp"
#include "tropid/word.hpp"

namespace tropid {

inline constexpr const char* kStatsCsvHeader = "experiment,param,estimate,ci_low,ci_high,samples,seed";

struct StatRow {
  std::string experiment;
  std::string param;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t hits = 0;  // numerator of the estimate for fractions
};

/// Normal-approximation 95% half-width for a binomial proportion.
double binomial_half_width(std::int64_t hits, std::int64_t samples);
StatRow fraction_row(std::string experiment, std::string param, std::int64_t hits, std::int64_t samples,
                     std::uint64_t seed);

/// Uniform word of the given content: a shuffle of the letter multiset.
Word sample_word(const Content& c, std::mt19937_64& rng);
/// Sample number `stream` of the run seeded by `seed`.
Word sample_word(const Content& c, std::uint64_t seed, std::uint64_t stream);

StatRow isolated_fraction(const Content& c, int n, std::int64_t samples, std::uint64_t seed, int threads = 1);
/// Exact fraction over all of W(c).
StatRow isolated_fraction_exhaustive(const Content& c, int n, int threads = 1);

struct NeighborRatio {
  std::uint64_t stream = 0;
  int ut3 = 0;  // neighbours ~3 equivalent
  int ut2 = 0;  // neighbours ~2 equivalent
};

struct NeighborRatioResult {
  std::vector<NeighborRatio> ratios;  // ut2 > 0 only, by stream
  std::int64_t skipped = 0;           // samples with no ~2 neighbour
};

NeighborRatioResult neighbor_ratio_ut3(int length, std::int64_t samples, std::uint64_t seed, int threads = 1);
double median_ratio(const NeighborRatioResult& r);

struct CompositionRow {
  int la = 0;
  int lb = 0;
  std::int64_t isoterms = 0;
  std::int64_t twins = 0;
  std::int64_t larger = 0;
  std::int64_t classes = 0;
  BigCount words = 0;
  double class_ratio = 0;  // classes / words
};

std::vector<CompositionRow> class_composition(int length, int threads = 1);

struct LargestClass {
  ClassInterval interval;
  BigCount size;
};
/// Maximal class_size over list_classes_2; ties go to the least minimal word.
LargestClass largest_class(int la, int lb);

std::string stats_csv(const std::vector<StatRow>& rows);
nlohmann::json stats_metadata(const std::string& experiment, const nlohmann::json& config);

}  // namespace tropid
