#include "tropid/point_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropid {

std::strong_ordering lex_compare(PointView a, PointView b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

PointSet::PointSet(int dim, std::vector<Coord> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim <= 0 && !coords_.empty()) throw std::invalid_argument("PointSet: non-positive dimension");
  if (dim > 0 && coords_.size() % static_cast<std::size_t>(dim) != 0) {
    throw std::invalid_argument("PointSet: coordinate count is not a multiple of the dimension");
  }
}

PointSet::PointSet(int dim, std::initializer_list<std::initializer_list<Coord>> points) : dim_(dim) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("PointSet: point of wrong dimension");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
}

void PointSet::push_back(PointView p) {
  if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("PointSet: point of wrong dimension");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointSet::canonicalize() {
  const std::size_t n = size();
  if (n < 2) return;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_compare((*this)[a], (*this)[b]) < 0; });
  std::vector<Coord> out;
  out.reserve(coords_.size());
  PointView last;
  for (std::size_t idx : order) {
    PointView p = (*this)[idx];
    if (!last.empty() && lex_compare(last, p) == 0) continue;
    out.insert(out.end(), p.begin(), p.end());
    last = p;
  }
  coords_ = std::move(out);
}

bool PointSet::is_canonical() const {
  for (std::size_t i = 1; i < size(); ++i) {
    if (lex_compare((*this)[i - 1], (*this)[i]) >= 0) return false;
  }
  return true;
}

bool PointSet::contains(PointView p) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = lex_compare((*this)[mid], p);
    if (c == 0) return true;
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return false;
}

LatticePolytope LatticePolytope::from_canonical_vertices(PointSet vertices) {
  LatticePolytope p(vertices.dim());
  p.vertices_ = std::move(vertices);
  return p;
}

std::size_t LatticePolytope::hash() const {
  std::size_t h = static_cast<std::size_t>(dim()) * 0x9e3779b97f4a7c15ULL;
  for (Coord c : vertices_.coords()) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace tropid
