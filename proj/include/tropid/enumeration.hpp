#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tropid/minmax.hpp"
#include "tropid/word.hpp"

namespace tropid {

/// Classes of W(c) under ~n, each sorted, ordered by their least word.
using ClassTable = std::vector<std::vector<Word>>;

ClassTable list_classes_general(const Content& c, int n, int threads = 1);
std::vector<Word> equivalence_class_general(const Word& w, int n);

/// All ~2 classes of W(la, lb) as intervals, sorted by minimal word.
std::vector<ClassInterval> list_classes_2(int la, int lb);

/// Exact ~n class of a two-letter word: its ~2 interval filtered by the
/// degree 2..n-1 signatures. Sorted.
std::vector<Word> equivalence_class_n(const Word& w, int n);

struct IdentityRecord {
  Word w;
  Word v;
  int n = 0;
  bool canonical = false;
  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

/// Images of the unordered pair {w, v} under reversal and letter exchange,
/// each as an ordered pair (smaller word first).
std::vector<std::pair<Word, Word>> pair_orbit(const Word& w, const Word& v);
/// Least element of pair_orbit.
std::pair<Word, Word> canonical_pair(const Word& w, const Word& v);

struct SearchOptions {
  bool canonical_only = false;
  int threads = 1;
  std::string checkpoint;  // empty: no checkpointing
  std::function<void(const std::string&)> progress;
};

/// All pairs w != v of two-letter words of the given length with w ~n v.
/// Every orbit is reported in full unless canonical_only is set.
std::vector<IdentityRecord> shortest_identity_search(int length, int n, const SearchOptions& options = {});

struct CatalanFamily {
  ClassInterval interval;
  BigCount size;
  BigCount formula;
};

Word catalan_word(int r, int k);
/// The minimal word of C(r,k) by the closed description.
Word catalan_min_word(int r, int k);
/// Height-bounded Dyck path count from the trigonometric sum.
BigCount catalan_formula(int r, int k);
CatalanFamily catalan_family(int r, int k);

}  // namespace tropid
