#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropid/exact_lp.hpp"
#include "tropid/point_set.hpp"

namespace tropid {

class Content;

/// Convex hull of a lexicographically sorted planar point set (Andrew's
/// monotone chain). Linear in the number of points.
LatticePolytope hull_2d(const PointSet& sorted_points);

/// Canonical minimal vertex set of conv(points), any dimension, exact.
LatticePolytope hull_nd(const PointSet& points);

/// True iff p lies in conv(points).
bool point_in_hull(PointView p, const PointSet& points);

/// True iff conv(p) == conv(q), decided by mutual inclusion.
bool hulls_equal(const PointSet& p, const PointSet& q);

/// max <c, p> over the points for a fixed family of directions c. Equal hulls
/// give equal fingerprints; an empty set gives an empty vector.
std::vector<Coord> hull_fingerprint(const PointSet& points);

/// Cartesian product with concatenated coordinates.
PointSet product(const PointSet& p, const PointSet& q);

/// Keeps the points of s (dimension m(d+1)) inside the polyhedron
///   sum_{k<d} y[mk+r] + |u|_r <= y[md+r]   for every letter r.
PointSet intersect_constraint(const PointSet& s, const Content& u_content);

/// The invertible affine map carrying the support of g_{u a_j} onto
/// (support(u) x support(a_j)) intersected with the polyhedron above.
std::vector<Coord> pi_map(PointView p, const Content& u_content, int d);

/// Incremental exact membership/extremality oracle for one finite point set.
///
/// Keeps a working set of known vertices of conv(points). Each query solves a
/// small LP over the working set; an infeasible LP yields a separating
/// direction, and the lexicographic maximiser of that direction over all
/// points is either a proof of non-membership or a new vertex. The working
/// set only grows, so later queries get cheaper.
///
/// `points` must be canonical and must outlive the oracle.
class HullOracle {
 public:
  explicit HullOracle(const PointSet& points);

  bool contains(PointView p);
  bool is_vertex(std::size_t index);
  LatticePolytope polytope();

  const PointSet& points() const { return points_; }

 private:
  std::size_t lex_argmax(const lp::Direction& c) const;
  void add_vertex(std::size_t index);

  const PointSet& points_;
  std::vector<std::size_t> working_;
  std::vector<char> known_vertex_;
};

}  // namespace tropid
