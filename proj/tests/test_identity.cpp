#include <random>

#include "doctest.h"
#include "known_identities.hpp"
#include "oracles.hpp"
#include "tropid/identity.hpp"

using namespace tropid;

namespace {

Word w2(const std::string& s) { return parse_word(s, 2); }

Word random_word(std::mt19937_64& rng, int len, int m) {
  std::vector<Letter> letters(static_cast<std::size_t>(len));
  for (auto& l : letters) l = static_cast<Letter>(rng() % static_cast<unsigned>(m));
  return Word(std::move(letters), m);
}

}  // namespace

TEST_CASE("tropical matrices") {
  TropicalMatrix a(2), b(2);
  a(0, 0) = 1;
  a(0, 1) = 3;
  a(1, 1) = -2;
  b(0, 0) = 0;
  b(0, 1) = -1;
  b(1, 1) = 4;
  TropicalMatrix c = a * b;
  CHECK(c(0, 0) == 1);
  CHECK(c(0, 1) == 7);
  CHECK(c(1, 1) == 2);
  CHECK(c(1, 0) == TropicalMatrix::kNegInf);
  CHECK(c.is_upper_triangular());
  TropicalMatrix one(1);
  one(0, 0) = 5;
  Morphism phi{one, one};
  CHECK(tropical_product(phi, w2("abab"))(0, 0) == 20);
  CHECK(tropical_product({a, b}, w2("ab")) == a * b);
}

TEST_CASE("identity checks on known pairs") {
  for (const auto& [x, y] : known::kBicyclic10) {
    CHECK(check_identity(w2(x), w2(y), 2));
    CHECK_FALSE(check_identity(w2(x), w2(y), 3));
  }
  for (const auto& [x, y] : known::ut3_length22()) {
    CAPTURE(x);
    CHECK(check_identity(w2(x), w2(y), 3));
  }
  CHECK_FALSE(check_identity(w2("aab"), w2("aba"), 2));
  CHECK(check_identity(w2("abab"), w2("abab"), 4));
  CHECK_FALSE(check_identity(w2("aab"), w2("abb"), 2));
  CHECK_THROWS_AS(check_identity(w2("ab"), parse_word("ab", 3), 2), std::invalid_argument);
}

TEST_CASE("random morphisms never separate identities") {
  for (const auto& [x, y] : known::kBicyclic10) {
    CHECK_FALSE(random_morphism_test(w2(x), w2(y), 2, 1000, 17).distinguished);
  }
  for (const auto& [x, y] : known::ut3_length22()) {
    CHECK_FALSE(random_morphism_test(w2(x), w2(y), 3, 300, 17).distinguished);
  }
  auto r = random_morphism_test(w2("aab"), w2("aba"), 2, 100, 1);
  CHECK(r.distinguished);
  REQUIRE(r.witness);
  CHECK_FALSE(tropical_product(*r.witness, w2("aab")) == tropical_product(*r.witness, w2("aba")));
  auto again = random_morphism_test(w2("aab"), w2("aba"), 2, 100, 1);
  CHECK(again.trial == r.trial);
}

TEST_CASE("n = 2 agrees with brute-force height hulls") {
  for (int len = 2; len <= 9; ++len) {
    for (int la = 1; la < len; ++la) {
      auto words = words_with_content(Content(std::vector<int>{la, len - la}));
      for (std::size_t i = 0; i < words.size(); i += 3) {
        for (std::size_t j = i + 1; j < words.size(); j += 5) {
          bool expect = true;
          for (int letter = 0; letter < 2; ++letter) {
            expect = expect && oracle::vertices(letter_height(words[i], letter).points) ==
                                   oracle::vertices(letter_height(words[j], letter).points);
          }
          CHECK(check_identity(words[i], words[j], 2) == expect);
        }
      }
    }
  }
}

TEST_CASE("symmetries and monotonicity in n") {
  std::mt19937_64 rng(21);
  const int perm[] = {2, 0, 1};
  for (int t = 0; t < 150; ++t) {
    const int m = 2 + t % 2;
    Word w = random_word(rng, 10, m);
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    const std::size_t k = rng() % 9;
    std::swap(letters[k], letters[k + 1]);
    Word v(letters, m);
    for (int n = 2; n <= 3; ++n) {
      const bool same = check_identity(w, v, n);
      CHECK(check_identity(v, w, n) == same);
      CHECK(check_identity(reverse(w), reverse(v), n) == same);
      if (m == 3) CHECK(check_identity(apply_letter_permutation(w, perm), apply_letter_permutation(v, perm), n) == same);
      if (n == 3 && same) CHECK(check_identity(w, v, 2));
    }
  }
}

TEST_CASE("isolation and isoterms") {
  CHECK(is_locally_isolated(w2("a"), 2));
  CHECK_FALSE(is_locally_isolated(w2("abbaababba"), 2));
  CHECK(is_isoterm(w2("aabbab"), 2));
  CHECK(is_isoterm(w2("abababa"), 2));
  CHECK_FALSE(is_isoterm(w2("abbaababba"), 2));
  CHECK(is_isoterm(w2("abbaababba"), 3));
  for (const Word& w : words_with_content(Content(std::vector<int>{4, 5}))) CHECK(is_locally_isolated(w, 2));
  CHECK(equivalent_neighbor_count(w2("abbaababba"), 2) == 1);
}
