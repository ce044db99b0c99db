#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "tropid/signature.hpp"
#include "tropid/word.hpp"

namespace tropid {

/// Square matrix over (Z u {-inf}, max, +). Upper-triangular matrices keep
/// -inf strictly below the diagonal.
class TropicalMatrix {
 public:
  using Entry = std::int64_t;
  static constexpr Entry kNegInf = std::numeric_limits<Entry>::min();

  explicit TropicalMatrix(int n = 1);  // all entries -inf
  static TropicalMatrix identity(int n);

  int size() const { return n_; }
  Entry& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Entry operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  bool is_upper_triangular() const;

  friend TropicalMatrix operator*(const TropicalMatrix& a, const TropicalMatrix& b);
  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  int n_;
  std::vector<Entry> e_;
};

/// Tropical addition is max; multiplication is + with -inf absorbing.
TropicalMatrix::Entry tropical_mul(TropicalMatrix::Entry a, TropicalMatrix::Entry b);

/// One matrix per letter.
using Morphism = std::vector<TropicalMatrix>;

TropicalMatrix tropical_product(const Morphism& phi, const Word& w);

struct MorphismTestResult {
  bool distinguished = false;
  int trial = -1;             // first distinguishing trial
  std::optional<Morphism> witness;
};

/// Evaluates both words under `trials` random upper-triangular morphisms with
/// finite entries uniform in [-range, range]. Trial t uses RNG stream t.
MorphismTestResult random_morphism_test(const Word& w, const Word& v, int n, int trials, std::uint64_t seed,
                                        int range = 10);

/// Decides w ~n v via signatures of degree 1..n-1, lowest degree first.
bool check_identity(const Word& w, const Word& v, int n);

/// Fixes w and n and answers check_identity(w, v, n) for many v, reusing the
/// degree-1 polygons and the higher-degree supports of w.
class IdentityChecker {
 public:
  IdentityChecker(const Word& w, int n);

  bool equivalent(const Word& v);
  const Word& word() const { return w_; }
  int n() const { return n_; }

 private:
  Word w_;
  int n_;
  Content content_;
  std::optional<PlanarSignature> planar_;
  std::vector<std::unique_ptr<DegreeComparator>> comparators_;  // index d-1
};

bool is_locally_isolated(const Word& w, int n);
/// Number of neighbours v of w with v ~n w.
int equivalent_neighbor_count(const Word& w, int n);

/// True iff the ~n class of w is {w}.
bool is_isoterm(const Word& w, int n);

}  // namespace tropid
