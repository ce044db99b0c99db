#include "tropid/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tropid {

namespace {

void require_two_letters(const Word& w, const char* what) {
  if (w.alphabet_size() != 2) throw std::invalid_argument(std::string(what) + ": requires a two-letter alphabet");
}

void require_same_content(const Word& w, const Word& v, const char* what) {
  require_two_letters(w, what);
  require_two_letters(v, what);
  if (content(w) != content(v)) throw std::invalid_argument(std::string(what) + ": words have different contents");
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet_size) : letters_(std::move(letters)), m_(alphabet_size) {
  if (m_ < 1 || m_ > kMaxAlphabet) throw std::invalid_argument("Word: alphabet size must be in 1..26");
  for (Letter l : letters_) {
    if (l >= m_) throw std::invalid_argument("Word: letter outside alphabet");
  }
}

std::string Word::str() const {
  std::string s(letters_.size(), 'a');
  std::transform(letters_.begin(), letters_.end(), s.begin(), [](Letter l) { return static_cast<char>('a' + l); });
  return s;
}

int Content::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string Content::str() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts_[i]);
  }
  return s;
}

Word parse_word(std::string_view text, int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in 1..26");
  if (text.empty()) throw std::invalid_argument("empty word");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch < 'a' || ch >= 'a' + alphabet_size) {
      throw std::invalid_argument(std::string("character '") + ch + "' outside alphabet of size " +
                                  std::to_string(alphabet_size));
    }
    letters.push_back(static_cast<Letter>(ch - 'a'));
  }
  return Word(std::move(letters), alphabet_size);
}

Content parse_content(std::string_view text) {
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
      throw std::invalid_argument("malformed content '" + std::string(text) + "'");
    }
    counts.push_back(value);
    pos = comma + 1;
  }
  if (counts.empty() || counts.size() > kMaxAlphabet) throw std::invalid_argument("content must list 1..26 counts");
  return Content(std::move(counts));
}

Content content(const Word& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.alphabet_size()), 0);
  for (Letter l : w.letters()) ++counts[l];
  return Content(std::move(counts));
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters), w.alphabet_size());
}

Word apply_letter_permutation(const Word& w, std::span<const int> sigma) {
  const int m = w.alphabet_size();
  if (static_cast<int>(sigma.size()) != m) throw std::invalid_argument("permutation has wrong size");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int s : sigma) {
    if (s < 0 || s >= m || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(s)] = 1;
  }
  std::vector<Letter> letters(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) letters[i] = static_cast<Letter>(sigma[w[i]]);
  return Word(std::move(letters), m);
}

Word dual(const Word& w) {
  require_two_letters(w, "dual");
  const int swap[] = {1, 0};
  return apply_letter_permutation(w, swap);
}

StaircasePath path(const Word& w) {
  const int m = w.alphabet_size();
  std::vector<Coord> coords((w.size() + 1) * static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::copy_n(coords.begin() + static_cast<std::ptrdiff_t>(k * m), m, coords.begin() + static_cast<std::ptrdiff_t>((k + 1) * m));
    ++coords[(k + 1) * static_cast<std::size_t>(m) + w[k]];
  }
  return StaircasePath(m, std::move(coords));
}

Height letter_height(const Word& w, int letter) {
  const int m = w.alphabet_size();
  if (letter < 0 || letter >= m) throw std::invalid_argument("letter_height: letter outside alphabet");
  Height h{letter, PointSet(m)};
  std::vector<Coord> prefix(static_cast<std::size_t>(m), 0);
  for (Letter l : w.letters()) {
    if (l == letter) h.points.push_back(prefix);
    ++prefix[l];
  }
  return h;
}

std::vector<int> a_heights(const Word& w) {
  require_two_letters(w, "a_heights");
  std::vector<int> alpha;
  int bs = 0;
  for (Letter l : w.letters()) {
    if (l == 0) alpha.push_back(bs);
    else ++bs;
  }
  return alpha;
}

Word word_from_height(std::span<const int> alpha, int lb) {
  int prev = 0;
  for (int a : alpha) {
    if (a < prev) throw std::invalid_argument("word_from_height: heights must be non-decreasing and non-negative");
    prev = a;
  }
  if (lb < prev) throw std::invalid_argument("word_from_height: height exceeds the number of b's");
  std::vector<Letter> letters;
  letters.reserve(alpha.size() + static_cast<std::size_t>(lb));
  prev = 0;
  for (int a : alpha) {
    letters.insert(letters.end(), static_cast<std::size_t>(a - prev), Letter{1});
    letters.push_back(0);
    prev = a;
  }
  letters.insert(letters.end(), static_cast<std::size_t>(lb - prev), Letter{1});
  return Word(std::move(letters), 2);
}

LatticeOrder compare(const Word& w, const Word& v) {
  require_same_content(w, v, "compare");
  const auto aw = a_heights(w), av = a_heights(v);
  bool le = true, ge = true;
  for (std::size_t k = 0; k < aw.size(); ++k) {
    le = le && aw[k] <= av[k];
    ge = ge && aw[k] >= av[k];
  }
  if (le && ge) return LatticeOrder::equal;
  if (le) return LatticeOrder::less;
  if (ge) return LatticeOrder::greater;
  return LatticeOrder::incomparable;
}

Word meet(const Word& w, const Word& v) {
  require_same_content(w, v, "meet");
  auto aw = a_heights(w);
  const auto av = a_heights(v);
  for (std::size_t k = 0; k < aw.size(); ++k) aw[k] = std::min(aw[k], av[k]);
  return word_from_height(aw, content(w)[1]);
}

Word join(const Word& w, const Word& v) {
  require_same_content(w, v, "join");
  auto aw = a_heights(w);
  const auto av = a_heights(v);
  for (std::size_t k = 0; k < aw.size(); ++k) aw[k] = std::max(aw[k], av[k]);
  return word_from_height(aw, content(w)[1]);
}

std::vector<Word> neighbors(const Word& w) {
  std::vector<Word> out;
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    if (letters[k] == letters[k + 1]) continue;
    std::swap(letters[k], letters[k + 1]);
    out.emplace_back(letters, w.alphabet_size());
    std::swap(letters[k], letters[k + 1]);
  }
  // swaps at distinct positions always give distinct words
  return out;
}

Word delete_letters(const Word& w, std::span<const int> deleted) {
  const int m = w.alphabet_size();
  std::vector<int> relabel(static_cast<std::size_t>(m), 0);
  for (int d : deleted) {
    if (d < 0 || d >= m) throw std::invalid_argument("delete_letters: letter outside alphabet");
    relabel[static_cast<std::size_t>(d)] = -1;
  }
  int next = 0;
  for (int& r : relabel) {
    if (r == 0) r = next++;
  }
  if (next == 0) throw std::invalid_argument("delete_letters: cannot delete the whole alphabet");
  std::vector<Letter> letters;
  for (Letter l : w.letters()) {
    if (relabel[l] >= 0) letters.push_back(static_cast<Letter>(relabel[l]));
  }
  return Word(std::move(letters), next);
}

std::vector<Word> words_with_content(const Content& c) {
  std::vector<Letter> letters;
  for (int i = 0; i < c.alphabet_size(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(c[i]), static_cast<Letter>(i));
  std::vector<Word> out;
  if (letters.empty()) return out;
  do {
    out.emplace_back(letters, c.alphabet_size());
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<std::pair<int, int>> blocks(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back().first == l) ++out.back().second;
    else out.emplace_back(l, 1);
  }
  return out;
}

}  // namespace tropid
