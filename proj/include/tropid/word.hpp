#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropid/point_set.hpp"

namespace tropid {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 26;

/// Finite word over the alphabet {0, ..., m-1}, written 'a', 'b', ... in text.
/// Immutable after construction. The empty word is representable (it shows up
/// as a prefix or after letter deletion) but parse_word never produces it.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  int alphabet_size() const { return m_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  int m_ = 1;
};

/// Occurrence counts per letter.
class Content {
 public:
  Content() = default;
  explicit Content(std::vector<int> counts) : counts_(std::move(counts)) {}

  int alphabet_size() const { return static_cast<int>(counts_.size()); }
  int operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;
  std::string str() const;  // "3,3,3"

  friend auto operator<=>(const Content&, const Content&) = default;
  friend bool operator==(const Content&, const Content&) = default;

 private:
  std::vector<int> counts_;
};

/// Staircase walk of a word: |w|+1 points from the origin to c(w).
class StaircasePath {
 public:
  StaircasePath(int dim, std::vector<Coord> coords) : points_(dim, std::move(coords)) {}
  std::size_t size() const { return points_.size(); }
  PointView operator[](std::size_t i) const { return points_[i]; }
  const PointSet& points() const { return points_; }

 private:
  PointSet points_;
};

/// The a_i-height: one path point per occurrence of letter i, namely the
/// content of the prefix strictly before that occurrence. Sorted by the i-th
/// coordinate, which is also lexicographic (the points form a chain).
struct Height {
  int letter = 0;
  PointSet points;
};

enum class LatticeOrder { less, equal, greater, incomparable };

Word parse_word(std::string_view text, int alphabet_size);
Content parse_content(std::string_view text);

Content content(const Word& w);
Word reverse(const Word& w);
Word apply_letter_permutation(const Word& w, std::span<const int> sigma);
/// Exchanges 'a' and 'b' on a two-letter word.
Word dual(const Word& w);

StaircasePath path(const Word& w);
/// Empty point set when the letter does not occur.
Height letter_height(const Word& w, int letter);

/// Two-letter words: alpha_k = number of b's before the (k+1)-th a.
std::vector<int> a_heights(const Word& w);
/// Inverse of a_heights on W(alpha.size(), lb).
Word word_from_height(std::span<const int> alpha, int lb);

LatticeOrder compare(const Word& w, const Word& v);
Word meet(const Word& w, const Word& v);
Word join(const Word& w, const Word& v);
/// Distinct words one adjacent swap of two different letters away.
std::vector<Word> neighbors(const Word& w);
/// Removes the listed letters and re-indexes the remaining ones in order.
Word delete_letters(const Word& w, std::span<const int> deleted);

/// All words with the given content, in lexicographic order.
std::vector<Word> words_with_content(const Content& c);

/// Maximal runs of a single letter, as (letter, length) pairs.
std::vector<std::pair<int, int>> blocks(const Word& w);

}  // namespace tropid
