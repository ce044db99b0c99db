#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace tropid {

using Coord = std::int64_t;
using PointView = std::span<const Coord>;

/// A finite set of integer points of a fixed dimension, stored row-major in a
/// flat buffer. Call canonicalize() to sort lexicographically and drop
/// duplicates; most geometry entry points do this on their own copy.
class PointSet {
 public:
  explicit PointSet(int dim = 0) : dim_(dim) {}
  PointSet(int dim, std::vector<Coord> coords);
  PointSet(int dim, std::initializer_list<std::initializer_list<Coord>> points);

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return coords_.empty(); }

  PointView operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  const std::vector<Coord>& coords() const { return coords_; }

  void push_back(PointView p);
  void reserve(std::size_t n) { coords_.reserve(n * static_cast<std::size_t>(dim_)); }

  void canonicalize();
  bool is_canonical() const;

  /// Membership by exact coordinate match; requires canonical form.
  bool contains(PointView p) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

 private:
  int dim_;
  std::vector<Coord> coords_;
};

std::strong_ordering lex_compare(PointView a, PointView b);

/// Convex hull of a finite lattice point set in canonical form: the minimal
/// vertex set in lexicographic order. The empty polytope is a valid value.
class LatticePolytope {
 public:
  explicit LatticePolytope(int dim = 0) : vertices_(dim) {}

  /// Trusts the caller: `vertices` must already be the canonical vertex list.
  static LatticePolytope from_canonical_vertices(PointSet vertices);

  int dim() const { return vertices_.dim(); }
  bool empty() const { return vertices_.empty(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  const PointSet& vertices() const { return vertices_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

  std::size_t hash() const;

 private:
  PointSet vertices_;
};

}  // namespace tropid

template <>
struct std::hash<tropid::LatticePolytope> {
  std::size_t operator()(const tropid::LatticePolytope& p) const noexcept { return p.hash(); }
};
