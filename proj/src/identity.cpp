#include "tropid/identity.hpp"

#include <stdexcept>

#include "tropid/enumeration.hpp"
#include "tropid/minmax.hpp"
#include "tropid/rng.hpp"

namespace tropid {

TropicalMatrix::Entry tropical_mul(TropicalMatrix::Entry a, TropicalMatrix::Entry b) {
  if (a == TropicalMatrix::kNegInf || b == TropicalMatrix::kNegInf) return TropicalMatrix::kNegInf;
  TropicalMatrix::Entry r;
  if (__builtin_add_overflow(a, b, &r) || r == TropicalMatrix::kNegInf) {
    throw std::overflow_error("tropical product overflows 64-bit entries");
  }
  return r;
}

TropicalMatrix::TropicalMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n), kNegInf) {
  if (n < 1) throw std::invalid_argument("TropicalMatrix: size must be positive");
}

TropicalMatrix TropicalMatrix::identity(int n) {
  TropicalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  return m;
}

bool TropicalMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < i; ++j) {
      if ((*this)(i, j) != kNegInf) return false;
    }
  }
  return true;
}

TropicalMatrix operator*(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("TropicalMatrix: size mismatch");
  const int n = a.n_;
  TropicalMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == TropicalMatrix::kNegInf) continue;
      for (int j = 0; j < n; ++j) {
        const auto v = tropical_mul(aik, b(k, j));
        if (v > c(i, j)) c(i, j) = v;
      }
    }
  }
  return c;
}

TropicalMatrix tropical_product(const Morphism& phi, const Word& w) {
  if (static_cast<int>(phi.size()) < w.alphabet_size()) throw std::invalid_argument("morphism misses letters");
  if (phi.empty()) throw std::invalid_argument("empty morphism");
  TropicalMatrix acc = TropicalMatrix::identity(phi.front().size());
  for (Letter l : w.letters()) acc = acc * phi[l];
  return acc;
}

MorphismTestResult random_morphism_test(const Word& w, const Word& v, int n, int trials, std::uint64_t seed,
                                        int range) {
  if (trials < 1) throw std::invalid_argument("random_morphism_test: trials must be positive");
  if (n < 1 || range < 0) throw std::invalid_argument("random_morphism_test: bad parameters");
  const int m = std::max(w.alphabet_size(), v.alphabet_size());
  MorphismTestResult result;
  for (int t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
    std::uniform_int_distribution<int> entry(-range, range);
    Morphism phi;
    for (int letter = 0; letter < m; ++letter) {
      TropicalMatrix mat(n);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) mat(i, j) = entry(rng);
      }
      phi.push_back(std::move(mat));
    }
    if (!(tropical_product(phi, w) == tropical_product(phi, v))) {
      result.distinguished = true;
      result.trial = t;
      result.witness = std::move(phi);
      return result;
    }
  }
  return result;
}

IdentityChecker::IdentityChecker(const Word& w, int n) : w_(w), n_(n), content_(content(w)) {
  if (n < 2) throw std::invalid_argument("identity check needs n >= 2");
  comparators_.resize(static_cast<std::size_t>(n - 1));
}

bool IdentityChecker::equivalent(const Word& v) {
  if (v.alphabet_size() != w_.alphabet_size()) throw std::invalid_argument("words use different alphabets");
  if (v == w_) return true;
  if (content(v) != content_) return false;
  for (int d = 1; d < n_; ++d) {
    if (d == 1 && w_.alphabet_size() == 2) {
      if (!planar_) planar_ = planar_signature(w_);
      if (!(planar_signature(v) == *planar_)) return false;
      continue;
    }
    auto& cmp = comparators_[static_cast<std::size_t>(d - 1)];
    if (!cmp) cmp = std::make_unique<DegreeComparator>(w_, d);
    if (!cmp->equals(v)) return false;
  }
  return true;
}

bool check_identity(const Word& w, const Word& v, int n) {
  IdentityChecker checker(w, n);
  return checker.equivalent(v);
}

int equivalent_neighbor_count(const Word& w, int n) {
  IdentityChecker checker(w, n);
  int count = 0;
  for (const Word& u : neighbors(w)) count += checker.equivalent(u) ? 1 : 0;
  return count;
}

bool is_locally_isolated(const Word& w, int n) {
  IdentityChecker checker(w, n);
  for (const Word& u : neighbors(w)) {
    if (checker.equivalent(u)) return false;
  }
  return true;
}

bool is_isoterm(const Word& w, int n) {
  if (n < 2) throw std::invalid_argument("is_isoterm: n must be at least 2");
  if (w.alphabet_size() == 2) {
    ClassInterval ci = minmax(w);
    if (ci.min_word == ci.max_word) return true;
    if (n == 2) return false;
    return equivalence_class_n(w, n).size() == 1;
  }
  return equivalence_class_general(w, n).size() == 1;
}

}  // namespace tropid
