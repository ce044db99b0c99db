#include "tropid/minmax.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropid {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

// Vertices of a canonical planar polytope in boundary order.
std::vector<std::pair<Coord, Coord>> boundary(const PointSet& v) {
  std::vector<std::pair<Coord, Coord>> pts;
  for (std::size_t i = 0; i < v.size(); ++i) pts.emplace_back(v[i][0], v[i][1]);
  if (pts.size() <= 2) return pts;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<Coord, Coord>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

using Slices = std::vector<std::pair<Coord, Coord>>;

// For each integer u in [u0, u0 + size), the lattice range of v over the
// polygon, where (u, v) are the coordinates selected by `flip`.
Slices slice(const std::vector<std::pair<Coord, Coord>>& poly, bool flip, Coord& u0) {
  auto uv = [flip](const std::pair<Coord, Coord>& p) {
    return flip ? std::make_pair(p.second, p.first) : p;
  };
  Coord umin = std::numeric_limits<Coord>::max(), umax = std::numeric_limits<Coord>::min();
  for (const auto& p : poly) {
    umin = std::min(umin, uv(p).first);
    umax = std::max(umax, uv(p).first);
  }
  u0 = umin;
  Slices s(static_cast<std::size_t>(umax - umin + 1),
           {std::numeric_limits<Coord>::max(), std::numeric_limits<Coord>::min()});
  auto widen = [&](Coord u, Coord lo, Coord hi) {
    auto& r = s[static_cast<std::size_t>(u - umin)];
    r.first = std::min(r.first, lo);
    r.second = std::max(r.second, hi);
  };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto [u1, v1] = uv(poly[i]);
    auto [u2, v2] = uv(poly[(i + 1) % poly.size()]);
    if (u1 == u2) {
      widen(u1, std::min(v1, v2), std::max(v1, v2));
      continue;
    }
    if (u1 > u2) {
      std::swap(u1, u2);
      std::swap(v1, v2);
    }
    for (Coord u = u1; u <= u2; ++u) {
      const Coord num = v1 * (u2 - u1) + (v2 - v1) * (u - u1);
      widen(u, ceil_div(num, u2 - u1), floor_div(num, u2 - u1));
    }
  }
  return s;
}

std::pair<Coord, Coord> lookup(const Slices& s, Coord u0, Coord u) {
  if (s.empty() || u < u0 || u >= u0 + static_cast<Coord>(s.size())) return {1, 0};
  return s[static_cast<std::size_t>(u - u0)];
}

void require_two_letters(const Word& w) {
  if (w.alphabet_size() != 2) throw std::invalid_argument("min/max words need a two-letter alphabet");
}

}  // namespace

PolygonSlices::PolygonSlices(const LatticePolytope& polygon) {
  if (polygon.empty()) return;
  if (polygon.dim() != 2) throw std::invalid_argument("PolygonSlices: polygon must be planar");
  auto poly = boundary(polygon.vertices());
  columns_ = slice(poly, false, x0_);
  rows_ = slice(poly, true, y0_);
}

std::pair<Coord, Coord> PolygonSlices::column(Coord x) const { return lookup(columns_, x0_, x); }
std::pair<Coord, Coord> PolygonSlices::row(Coord y) const { return lookup(rows_, y0_, y); }

bool PolygonSlices::contains(Coord x, Coord y) const {
  auto [lo, hi] = column(x);
  return lo <= y && y <= hi;
}

std::vector<ChainVertex> vertex_chain(const LatticePolytope& a, const LatticePolytope& b, const Content& c) {
  std::vector<ChainVertex> chain;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) chain.push_back({a.vertices()[i][0], a.vertices()[i][1], ChainLabel::a});
  for (std::size_t i = 0; i < b.vertices().size(); ++i) chain.push_back({b.vertices()[i][0], b.vertices()[i][1], ChainLabel::b});
  std::sort(chain.begin(), chain.end(), [](const ChainVertex& p, const ChainVertex& q) {
    return std::make_pair(p.x + p.y, p.x) < std::make_pair(q.x + q.y, q.x);
  });
  chain.push_back({c[0], c[1], ChainLabel::end});
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& p = chain[i - 1];
    const auto& q = chain[i];
    if (!(p.x <= q.x && p.y <= q.y) || (p.x == q.x && p.y == q.y)) {
      throw std::invalid_argument("vertex_chain: vertices are not a chain; not the signature of a word");
    }
  }
  return chain;
}

ChainVertex max_segment(const ChainVertex& p, const ChainVertex& next, const PolygonSlices& a,
                        const PolygonSlices& b) {
  if (p.x == next.x || p.y == next.y) return next;
  if (p.label == ChainLabel::b) {
    // North as far as possible
    auto [alo, ahi] = a.column(p.x);
    auto [blo, bhi] = b.column(p.x);
    const Coord lo = std::max({p.y + 1, alo, blo + 1});
    const Coord hi = std::min({next.y, ahi, bhi + 1});
    if (lo > hi) throw std::logic_error("max_segment: no admissible North move");
    return {p.x, hi, ChainLabel::a};
  }
  if (p.label == ChainLabel::a) {
    // East as little as possible
    auto [brlo, brhi] = b.row(p.y);
    auto [arlo, arhi] = a.row(p.y);
    const Coord lo = std::max({p.x + 1, brlo, arlo + 1});
    const Coord hi = std::min({next.x, brhi, arhi + 1});
    for (Coord k = lo; k <= hi; ++k) {
      auto [clo, chi] = a.column(k);
      if (clo <= chi && chi >= p.y + 1) return {k, p.y, ChainLabel::b};
    }
    throw std::logic_error("max_segment: no admissible East move");
  }
  throw std::logic_error("max_segment: path already at the end point");
}

Word max_word(const Word& w) {
  require_two_letters(w);
  if (w.empty()) return w;
  const Content c = content(w);
  const PlanarSignature sig = planar_signature(w);
  const PolygonSlices a(sig.a), b(sig.b);
  const auto chain = vertex_chain(sig.a, sig.b, c);
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    ChainVertex p = chain[i];
    const ChainVertex& target = chain[i + 1];
    while (p.x != target.x || p.y != target.y) {
      ChainVertex q = max_segment(p, target, a, b);
      letters.insert(letters.end(), static_cast<std::size_t>(q.x - p.x), Letter{0});
      letters.insert(letters.end(), static_cast<std::size_t>(q.y - p.y), Letter{1});
      p = q;
    }
  }
  return Word(std::move(letters), 2);
}

Word min_word(const Word& w) {
  require_two_letters(w);
  return dual(max_word(dual(w)));
}

ClassInterval minmax(const Word& w) { return {min_word(w), max_word(w)}; }

BigCount class_size(const ClassInterval& ci) {
  const auto lo = a_heights(ci.min_word);
  const auto hi = a_heights(ci.max_word);
  const int lb = content(ci.min_word)[1];
  if (lo.empty()) return 1;
  std::vector<BigCount> f(static_cast<std::size_t>(lb + 1), 0);
  for (int y = lo[0]; y <= hi[0]; ++y) f[static_cast<std::size_t>(y)] = 1;
  for (std::size_t k = 1; k < lo.size(); ++k) {
    std::vector<BigCount> g(f.size(), 0);
    BigCount run = 0;
    for (int y = 0; y <= hi[k]; ++y) {
      run += f[static_cast<std::size_t>(y)];
      if (y >= lo[k]) g[static_cast<std::size_t>(y)] = run;
    }
    f = std::move(g);
  }
  BigCount total = 0;
  for (const auto& v : f) total += v;
  return total;
}

bool interval_contains(const ClassInterval& ci, const Word& v) {
  if (content(v) != content(ci.min_word)) return false;
  const auto lo = a_heights(ci.min_word), hi = a_heights(ci.max_word), av = a_heights(v);
  for (std::size_t k = 0; k < av.size(); ++k) {
    if (av[k] < lo[k] || av[k] > hi[k]) return false;
  }
  return true;
}

void for_each_interval_word(const ClassInterval& ci, const std::function<bool(const Word&)>& visit) {
  const auto lo = a_heights(ci.min_word), hi = a_heights(ci.max_word);
  const int lb = content(ci.min_word)[1];
  std::vector<int> alpha(lo.size());
  bool stop = false;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int floor) {
    if (stop) return;
    if (k == alpha.size()) {
      if (!visit(word_from_height(alpha, lb))) stop = true;
      return;
    }
    for (int y = std::max(floor, lo[k]); y <= hi[k] && !stop; ++y) {
      alpha[k] = y;
      rec(k + 1, y);
    }
  };
  rec(0, 0);
}

std::vector<Word> interval_words(const ClassInterval& ci) {
  std::vector<Word> out;
  for_each_interval_word(ci, [&](const Word& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

}  // namespace tropid
