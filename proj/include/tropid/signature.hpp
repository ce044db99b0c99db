#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tropid/geometry.hpp"
#include "tropid/point_set.hpp"
#include "tropid/word.hpp"

namespace tropid {

/// Newton polytopes of g_u^w for every u in Sigma^d, u in lexicographic order.
/// The entry index of u is sum_k u_k m^(d-k).
struct DegreeSignature {
  int m = 0;
  int d = 0;
  std::vector<LatticePolytope> entries;

  friend bool operator==(const DegreeSignature&, const DegreeSignature&) = default;
};

struct UTnSignature {
  int n = 0;
  std::vector<DegreeSignature> per_degree;  // d = 1..n-1

  friend bool operator==(const UTnSignature&, const UTnSignature&) = default;
};

/// Text form of the index-th word of Sigma^d.
std::string subword_label(std::size_t index, int m, int d);

/// Direct enumeration of the exponent set of g_u^w. Canonical order.
PointSet support_points(const Word& w, const Word& u);

/// One pass over all position d-tuples; entry i is the support of the i-th u.
std::vector<PointSet> degree_supports(const Word& w, int d);

DegreeSignature degree_signature(const Word& w, int d);
UTnSignature utn_signature(const Word& w, int n);

/// Compares support(w, u a_j) mapped by pi_map with
/// (support(w,u) x support(w,a_j)) cut by the C_u inequalities.
bool check_recursion(const Word& w, const Word& u, int j);

/// Degree-1 polygons of a two-letter word (A for 'a', B for 'b').
struct PlanarSignature {
  LatticePolytope a;
  LatticePolytope b;
  friend bool operator==(const PlanarSignature&, const PlanarSignature&) = default;
};
PlanarSignature planar_signature(const Word& w);

/// Caches the degree-d supports of a fixed word and decides equality of
/// degree-d signatures against other words without computing their hulls.
/// Not thread-safe: the per-entry oracles grow as queries arrive.
class DegreeComparator {
 public:
  DegreeComparator(const Word& w, int d);
  DegreeComparator(const DegreeComparator&) = delete;
  DegreeComparator& operator=(const DegreeComparator&) = delete;

  bool equals(const Word& v);
  const Word& word() const { return w_; }
  int degree() const { return d_; }

 private:
  HullOracle& oracle(std::size_t entry);

  Word w_;
  int d_;
  std::vector<PointSet> supports_;
  std::vector<std::unique_ptr<HullOracle>> oracles_;
};

}  // namespace tropid
