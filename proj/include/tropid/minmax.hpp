#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <vector>

#include "tropid/point_set.hpp"
#include "tropid/signature.hpp"
#include "tropid/word.hpp"

namespace tropid {

using BigCount = boost::multiprecision::cpp_int;

enum class ChainLabel { a, b, end };

struct ChainVertex {
  Coord x = 0;
  Coord y = 0;
  ChainLabel label = ChainLabel::end;
  friend bool operator==(const ChainVertex&, const ChainVertex&) = default;
};

/// Lattice points of a convex polygon sliced along rows and columns.
class PolygonSlices {
 public:
  PolygonSlices() = default;
  explicit PolygonSlices(const LatticePolytope& polygon);

  bool contains(Coord x, Coord y) const;
  /// Lattice y-range of column x; empty when lo > hi.
  std::pair<Coord, Coord> column(Coord x) const;
  /// Lattice x-range of row y; empty when lo > hi.
  std::pair<Coord, Coord> row(Coord y) const;

 private:
  Coord x0_ = 0, y0_ = 0;
  std::vector<std::pair<Coord, Coord>> columns_, rows_;
};

/// Vertices of A and B merged with (la, lb) into the increasing chain.
/// Throws std::invalid_argument when the points are not totally ordered.
std::vector<ChainVertex> vertex_chain(const LatticePolytope& a, const LatticePolytope& b, const Content& c);

/// One step of the maximal-path construction: from p towards the next chain
/// vertex, returns the next corner of the path and its label.
ChainVertex max_segment(const ChainVertex& p, const ChainVertex& next, const PolygonSlices& a,
                        const PolygonSlices& b);

Word max_word(const Word& w);
Word min_word(const Word& w);

struct ClassInterval {
  Word min_word;
  Word max_word;
  friend bool operator==(const ClassInterval&, const ClassInterval&) = default;
};

ClassInterval minmax(const Word& w);
BigCount class_size(const ClassInterval& ci);
bool interval_contains(const ClassInterval& ci, const Word& v);

/// Visits every word of the interval once, in lexicographic order of a-heights.
/// Stops early when the visitor returns false.
void for_each_interval_word(const ClassInterval& ci, const std::function<bool(const Word&)>& visit);
std::vector<Word> interval_words(const ClassInterval& ci);

}  // namespace tropid
