#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropid/geometry.hpp"
#include "tropid/word.hpp"

using namespace tropid;

namespace {

PointSet random_points(std::mt19937_64& rng, int dim, int count, int range) {
  std::uniform_int_distribution<int> coord(0, range);
  PointSet s(dim);
  std::vector<Coord> p(static_cast<std::size_t>(dim));
  for (int i = 0; i < count; ++i) {
    for (auto& c : p) c = coord(rng);
    s.push_back(p);
  }
  return s;
}

}  // namespace

TEST_CASE("hull_2d drops interior and collinear points") {
  PointSet s(2, {{0, 0}, {1, 0}, {2, 0}, {2, 2}, {1, 1}, {0, 2}, {1, 2}});
  s.canonicalize();
  auto h = hull_2d(s);
  CHECK(h.vertices() == PointSet(2, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));

  PointSet line(2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(hull_2d(line).vertices() == PointSet(2, {{0, 0}, {3, 3}}));
}

TEST_CASE("hull_nd matches the brute-force vertex oracle") {
  std::mt19937_64 rng(7);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 40; ++trial) {
      PointSet s = random_points(rng, dim, 3 + trial % 7, 3);
      PointSet expect = oracle::vertices(s);
      CAPTURE(dim);
      CAPTURE(trial);
      CHECK(hull_nd(s).vertices() == expect);
    }
  }
}

TEST_CASE("degenerate hulls in higher dimension") {
  // a square in a 2-plane inside R^4
  PointSet s(4, {{0, 0, 1, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {0, 0, 1, 1}});
  CHECK(hull_nd(s).num_vertices() == 4);
  PointSet seg(3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {5, 5, 5}});
  CHECK(hull_nd(seg).vertices() == PointSet(3, {{0, 0, 0}, {5, 5, 5}}));
  CHECK(hull_nd(PointSet(3)).empty());
}

TEST_CASE("the two oracles agree") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int dim = 2 + trial % 4;
    PointSet s = random_points(rng, dim, 3 + trial % 6, 3);
    PointSet q = random_points(rng, dim, 3, 3);
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(oracle::in_hull_lp(q[i], s) == oracle::in_hull(q[i], s));
    CHECK(oracle::vertices_lp(s) == oracle::vertices(s));
  }
}

TEST_CASE("point_in_hull agrees with the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 3 + trial % 3;
    PointSet s = random_points(rng, dim, 6, 4);
    PointSet q = random_points(rng, dim, 4, 4);
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(point_in_hull(q[i], s) == oracle::in_hull(q[i], s));
  }
}

TEST_CASE("large coordinates survive the integer pivots") {
  const Coord big = Coord{1} << 40;
  PointSet s(3, {{0, 0, 0}, {big, 1, 0}, {1, big, 3}, {7, 5, big}, {big, big, big}});
  std::vector<Coord> inside{big / 4, big / 4, big / 4};
  std::vector<Coord> outside{big, big, big + 1};
  CHECK(point_in_hull(inside, s) == oracle::in_hull(inside, s));
  CHECK_FALSE(point_in_hull(outside, s));
  CHECK(hull_nd(s).num_vertices() == 5);
}

TEST_CASE("hulls_equal compares convex hulls, not point sets") {
  PointSet a(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  PointSet b(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 0, 0}, {0, 1, 1}});
  PointSet c(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
  CHECK(hulls_equal(a, b));
  CHECK_FALSE(hulls_equal(a, c));
  CHECK_FALSE(hulls_equal(a, PointSet(3)));
  CHECK(hulls_equal(PointSet(3), PointSet(3)));
}

TEST_CASE("product, constraint and pi map") {
  PointSet p(2, {{0, 0}, {1, 0}});
  PointSet q(2, {{0, 1}, {1, 1}});
  PointSet pq = product(p, q);
  CHECK(pq.size() == 4);
  CHECK(pq.is_canonical());

  Content u(std::vector<int>{1, 0});
  // keeps y2 >= y0 + 1 and y3 >= y1
  PointSet kept = intersect_constraint(pq, u);
  CHECK(kept == PointSet(4, {{0, 0, 1, 1}}));
  auto mapped = pi_map(std::vector<Coord>{0, 0, 1, 0}, u, 1);
  CHECK(mapped == std::vector<Coord>{0, 0, 2, 0});
}
