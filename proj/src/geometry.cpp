#include "tropid/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tropid/word.hpp"

namespace tropid {

namespace {

using lp::BigInt;
using lp::i128;

i128 cross(PointView o, PointView a, PointView b) {
  return static_cast<i128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<i128>(a[1] - o[1]) * (b[0] - o[0]);
}

PointSet canonical_copy(const PointSet& s) {
  PointSet c = s;
  c.canonicalize();
  return c;
}

i128 dot_small(const std::vector<i128>& c, PointView x) {
  i128 s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

BigInt dot_big(const std::vector<BigInt>& c, PointView x) {
  BigInt s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

// sign of c.(a - b)
int compare_dot(const lp::Direction& c, PointView a, PointView b) {
  if (c.is_big()) {
    BigInt da = dot_big(c.big, a), db = dot_big(c.big, b);
    return da < db ? -1 : (da > db ? 1 : 0);
  }
  i128 da = dot_small(c.small, a), db = dot_small(c.small, b);
  return da < db ? -1 : (da > db ? 1 : 0);
}

}  // namespace

LatticePolytope hull_2d(const PointSet& pts) {
  if (pts.dim() != 2) throw std::invalid_argument("hull_2d: points must be planar");
  const std::size_t n = pts.size();
  if (n <= 2) return LatticePolytope::from_canonical_vertices(pts);
  std::vector<std::size_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  PointSet v(2);
  for (std::size_t i = 0; i + 1 < k; ++i) v.push_back(pts[h[i]]);
  v.canonicalize();
  return LatticePolytope::from_canonical_vertices(std::move(v));
}

HullOracle::HullOracle(const PointSet& points) : points_(points), known_vertex_(points.size(), 0) {
  if (points_.empty()) return;
  const int dim = points_.dim();
  lp::Direction e;
  e.small.assign(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) {
    for (int sign : {1, -1}) {
      e.small[static_cast<std::size_t>(i)] = sign;
      std::size_t q = lex_argmax(e);
      if (!known_vertex_[q]) add_vertex(q);
    }
    e.small[static_cast<std::size_t>(i)] = 0;
  }
}

std::size_t HullOracle::lex_argmax(const lp::Direction& c) const {
  // points_ is sorted, so the last maximiser is the lexicographic maximum
  std::size_t best = 0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (compare_dot(c, points_[i], points_[best]) >= 0) best = i;
  }
  return best;
}

void HullOracle::add_vertex(std::size_t index) {
  known_vertex_[index] = 1;
  working_.push_back(index);
}

bool HullOracle::contains(PointView p) {
  if (points_.empty()) return false;
  if (points_.contains(p)) return true;
  for (;;) {
    lp::MembershipResult r = lp::convex_membership(points_, working_, p);
    if (r.inside) return true;
    std::size_t q = lex_argmax(r.separator);
    if (compare_dot(r.separator, points_[q], p) < 0) return false;
    add_vertex(q);
  }
}

bool HullOracle::is_vertex(std::size_t index) {
  if (known_vertex_[index]) return true;
  PointView p = points_[index];
  for (;;) {
    lp::MembershipResult r = lp::convex_membership(points_, working_, p);
    if (r.inside) return false;
    std::size_t q = lex_argmax(r.separator);
    add_vertex(q);
    if (q == index) return true;
  }
}

LatticePolytope HullOracle::polytope() {
  PointSet v(points_.dim());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (is_vertex(i)) v.push_back(points_[i]);
  }
  return LatticePolytope::from_canonical_vertices(std::move(v));
}

LatticePolytope hull_nd(const PointSet& points) {
  PointSet c = canonical_copy(points);
  if (c.dim() == 2) return hull_2d(c);
  if (c.size() <= 2) return LatticePolytope::from_canonical_vertices(std::move(c));
  HullOracle oracle(c);
  return oracle.polytope();
}

bool point_in_hull(PointView p, const PointSet& points) {
  PointSet c = canonical_copy(points);
  HullOracle oracle(c);
  return oracle.contains(p);
}

std::vector<Coord> hull_fingerprint(const PointSet& points) {
  if (points.empty()) return {};
  const std::size_t dim = static_cast<std::size_t>(points.dim());
  // +-e_i, then a few skew integer directions
  std::vector<std::vector<Coord>> dirs;
  for (std::size_t i = 0; i < dim; ++i) {
    for (Coord sign : {1, -1}) {
      std::vector<Coord> c(dim, 0);
      c[i] = sign;
      dirs.push_back(std::move(c));
    }
  }
  for (Coord seed = 1; seed <= 4; ++seed) {
    std::vector<Coord> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = static_cast<Coord>((seed * (2 * i + 1) * 7 + 3 * i * i + seed * seed) % 13) - 6;
    dirs.push_back(std::move(c));
  }
  std::vector<Coord> out;
  out.reserve(dirs.size());
  for (const auto& c : dirs) {
    Coord best = std::numeric_limits<Coord>::min();
    for (std::size_t j = 0; j < points.size(); ++j) {
      Coord v = 0;
      for (std::size_t i = 0; i < dim; ++i) v += c[i] * points[j][i];
      best = std::max(best, v);
    }
    out.push_back(best);
  }
  return out;
}

bool hulls_equal(const PointSet& p, const PointSet& q) {
  if (p.dim() != q.dim()) return false;
  PointSet a = canonical_copy(p), b = canonical_copy(q);
  if (a == b) return true;
  if (a.empty() || b.empty()) return false;
  PointSet only_a(a.dim()), only_b(b.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains(a[i])) only_a.push_back(a[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!a.contains(b[i])) only_b.push_back(b[i]);
  }
  if (!only_a.empty()) {
    HullOracle ob(b);
    for (std::size_t i = 0; i < only_a.size(); ++i) {
      if (!ob.contains(only_a[i])) return false;
    }
  }
  if (!only_b.empty()) {
    HullOracle oa(a);
    for (std::size_t i = 0; i < only_b.size(); ++i) {
      if (!oa.contains(only_b[i])) return false;
    }
  }
  return true;
}

PointSet product(const PointSet& p, const PointSet& q) {
  PointSet out(p.dim() + q.dim());
  out.reserve(p.size() * q.size());
  std::vector<Coord> buf(static_cast<std::size_t>(p.dim() + q.dim()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::copy(p[i].begin(), p[i].end(), buf.begin());
    for (std::size_t j = 0; j < q.size(); ++j) {
      std::copy(q[j].begin(), q[j].end(), buf.begin() + p.dim());
      out.push_back(buf);
    }
  }
  return out;
}

PointSet intersect_constraint(const PointSet& s, const Content& u_content) {
  const int m = u_content.alphabet_size();
  if (m <= 0 || s.dim() % m != 0 || s.dim() < m) throw std::invalid_argument("intersect_constraint: dimension mismatch");
  const int d = s.dim() / m - 1;
  PointSet out(s.dim());
  for (std::size_t i = 0; i < s.size(); ++i) {
    PointView y = s[i];
    bool keep = true;
    for (int r = 0; r < m && keep; ++r) {
      Coord lhs = u_content[static_cast<std::size_t>(r)];
      for (int k = 0; k < d; ++k) lhs += y[static_cast<std::size_t>(m * k + r)];
      keep = lhs <= y[static_cast<std::size_t>(m * d + r)];
    }
    if (keep) out.push_back(y);
  }
  return out;
}

std::vector<Coord> pi_map(PointView p, const Content& u_content, int d) {
  const int m = u_content.alphabet_size();
  if (static_cast<int>(p.size()) != m * (d + 1)) throw std::invalid_argument("pi_map: dimension mismatch");
  std::vector<Coord> out(p.begin(), p.end());
  for (int r = 0; r < m; ++r) {
    Coord s = u_content[static_cast<std::size_t>(r)];
    for (int k = 0; k <= d; ++k) s += p[static_cast<std::size_t>(k * m + r)];
    out[static_cast<std::size_t>(m * d + r)] = s;
  }
  return out;
}

}  // namespace tropid
