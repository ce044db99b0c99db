#pragma once

// Slow reference implementations used only by the tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "tropid/point_set.hpp"
#include "tropid/word.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using tropid::Coord;
using tropid::PointSet;
using tropid::PointView;

// Solves M x = b exactly when M (rows x k) has full column rank.
// Returns false when the rank is deficient or the system is inconsistent.
inline bool solve_full_rank(std::vector<std::vector<Rational>> m, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t rows = m.size(), k = m.empty() ? 0 : m[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) return false;
    std::swap(m[piv], m[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  x.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) x[c] = b[pivot_row[c]] / m[pivot_row[c]][c];
  return true;
}

// Caratheodory: p is in conv(S) iff it is a convex combination of some
// affinely independent subset of S.
inline bool in_hull(PointView p, const PointSet& s) {
  const std::size_t n = s.size(), dim = static_cast<std::size_t>(s.dim());
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!pick.empty()) {
      std::vector<std::vector<Rational>> m(dim + 1, std::vector<Rational>(pick.size()));
      std::vector<Rational> b(dim + 1);
      for (std::size_t j = 0; j < pick.size(); ++j) {
        for (std::size_t r = 0; r < dim; ++r) m[r][j] = s[pick[j]][r];
        m[dim][j] = 1;
      }
      for (std::size_t r = 0; r < dim; ++r) b[r] = p[r];
      b[dim] = 1;
      std::vector<Rational> x;
      if (solve_full_rank(m, b, x) && std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; })) return true;
    }
    if (pick.size() == dim + 1) return false;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

// Textbook phase-1 simplex over the rationals, dense tableau, Bland's rule:
// is there lambda >= 0 with sum lambda_j s_j = p and sum lambda_j = 1?
inline bool in_hull_lp(PointView p, const PointSet& s) {
  const std::size_t k = s.size(), rows = static_cast<std::size_t>(s.dim()) + 1;
  if (k == 0) return false;
  // columns: k lambdas, rows artificials, then the right-hand side
  const std::size_t cols = k + rows + 1;
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    Rational rhs = r + 1 < rows ? Rational(p[r]) : Rational(1);
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[r][j] = sign * (r + 1 < rows ? Rational(s[j][r]) : Rational(1));
    t[r][k + r] = 1;
    t[r][cols - 1] = sign * rhs;
  }
  // objective row: minimise the sum of artificials, kept in reduced form
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j < k + rows && j >= k) continue;
      t[rows][j] -= t[r][j];
    }
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // cannot happen for a bounded phase 1
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[rows][cols - 1] == 0;
}

// Vertices by the LP test: p is a vertex iff it is not in the hull of the rest.
inline PointSet vertices_lp(const PointSet& s) {
  PointSet c = s;
  c.canonicalize();
  PointSet out(c.dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    PointSet rest(c.dim());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != i) rest.push_back(c[j]);
    }
    if (!in_hull_lp(c[i], rest)) out.push_back(c[i]);
  }
  return out;
}

inline PointSet vertices(const PointSet& s) {
  PointSet c = s;
  c.canonicalize();
  PointSet out(c.dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    PointSet rest(c.dim());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != i) rest.push_back(c[j]);
    }
    if (!in_hull(c[i], rest)) out.push_back(c[i]);
  }
  return out;
}

// Support of g_u^w straight from the definition: every increasing position
// tuple spelling u, with letter counts of each gap counted directly.
inline PointSet support(const tropid::Word& w, const tropid::Word& u) {
  const int m = w.alphabet_size(), d = static_cast<int>(u.size());
  PointSet out(m * d);
  std::vector<std::size_t> pos;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pos.size()) == d) {
      std::vector<Coord> p(static_cast<std::size_t>(m * d), 0);
      for (int k = 0; k < d; ++k) {
        const std::size_t from = k == 0 ? 0 : pos[static_cast<std::size_t>(k - 1)] + 1;
        for (std::size_t i = from; i < pos[static_cast<std::size_t>(k)]; ++i) ++p[static_cast<std::size_t>(k * m + w[i])];
      }
      out.push_back(p);
      return;
    }
    for (std::size_t i = start; i < w.size(); ++i) {
      if (w[i] != u[pos.size()]) continue;
      pos.push_back(i);
      rec(i + 1);
      pos.pop_back();
    }
  };
  rec(0);
  out.canonicalize();
  return out;
}

// All words of length d over m letters, lexicographic.
inline std::vector<tropid::Word> all_words(int m, int d) {
  std::vector<tropid::Word> out;
  std::vector<tropid::Letter> letters(static_cast<std::size_t>(d), 0);
  for (;;) {
    out.emplace_back(letters, m);
    int k = d - 1;
    while (k >= 0 && letters[static_cast<std::size_t>(k)] == m - 1) letters[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++letters[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace oracle
