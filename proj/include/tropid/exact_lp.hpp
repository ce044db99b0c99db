#pragma once

// Exact feasibility for "is p a convex combination of these generators".
//
// Phase-1 simplex on
//     sum_j lambda_j (g_j - p) = 0,   sum_j lambda_j = 1,   lambda >= 0
// with integer-preserving (Bareiss) pivots: every tableau entry is an integer
// minor of the initial system, so no rationals are ever formed. Bland's rule
// keeps the (highly degenerate) iteration finite. When the system is
// infeasible the phase-1 duals give a Farkas certificate, returned as a
// direction c with c.g_j < c.p for every generator.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropid/point_set.hpp"

namespace tropid::lp {

using BigInt = boost::multiprecision::cpp_int;
using i128 = __int128;

struct Overflow {};

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

/// Separating direction from an infeasible membership problem. Held as
/// 128-bit integers when they fit after gcd reduction, otherwise as bignums.
struct Direction {
  std::vector<i128> small;
  std::vector<BigInt> big;
  bool is_big() const { return !big.empty(); }
};

struct MembershipResult {
  bool inside = false;
  Direction separator;  // meaningful only when !inside
};

template <class Int>
class Tableau {
 public:
  // columns: indices into `points`; p: query point.
  Tableau(const PointSet& points, std::span<const std::size_t> columns, PointView p)
      : rows_(points.dim() + 1), cols_(columns.size()), width_(cols_ + rows_ + 1),
        cells_((rows_ + 1) * width_, Int(0)), basis_(rows_) {
    const std::size_t dim = static_cast<std::size_t>(points.dim());
    for (std::size_t j = 0; j < cols_; ++j) {
      PointView g = points[columns[j]];
      Int colsum(0);
      for (std::size_t r = 0; r < dim; ++r) {
        Int v = Int(g[r] - p[r]);
        at(r, j) = v;
        colsum += v;
      }
      at(dim, j) = Int(1);
      colsum += 1;
      at(rows_, j) = -colsum;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      at(r, cols_ + r) = Int(1);
      basis_[r] = cols_ + r;
    }
    at(dim, width_ - 1) = Int(1);
    at(rows_, width_ - 1) = Int(-1);
  }

  /// Runs phase 1. Returns true iff feasible.
  bool solve() {
    for (;;) {
      if (at(rows_, width_ - 1) == 0) return true;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(rows_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return false;
      std::size_t leave = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Int& a = at(r, enter);
        if (a <= 0) continue;
        if (leave == rows_) {
          leave = r;
          continue;
        }
        // rhs_r / a  vs  rhs_leave / a_leave
        Int lhs = checked_mul(at(r, width_ - 1), at(leave, enter));
        Int rhs = checked_mul(at(leave, width_ - 1), a);
        if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leave])) leave = r;
      }
      if (leave == rows_) return false;  // unreachable in phase 1
      pivot(leave, enter);
    }
  }

  /// Farkas direction after an infeasible solve(): den*y restricted to the
  /// coordinate rows, where y are the phase-1 duals.
  std::vector<Int> separator() const {
    std::vector<Int> c(rows_ - 1);
    for (std::size_t r = 0; r + 1 < rows_; ++r) c[r] = den_ - at(rows_, cols_ + r);
    return c;
  }

 private:
  Int& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Int piv = at(pr, pc);
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Int factor = at(r, pc);
      for (std::size_t c = 0; c < width_; ++c) {
        Int v = checked_mul(at(r, c), piv);
        if (factor != 0) v = checked_sub(v, checked_mul(factor, at(pr, c)));
        at(r, c) = v / den_;
      }
    }
    den_ = piv;
    basis_[pr] = pc;
  }

  std::size_t rows_, cols_, width_;
  std::vector<Int> cells_;
  std::vector<std::size_t> basis_;
  Int den_ = Int(1);
};

/// Decides whether p lies in conv{points[j] : j in columns}, exactly.
MembershipResult convex_membership(const PointSet& points, std::span<const std::size_t> columns, PointView p);

}  // namespace tropid::lp
