#include <cmath>

#include "doctest.h"
#include "tropid/enumeration.hpp"
#include "tropid/identity.hpp"
#include "tropid/stats.hpp"

using namespace tropid;

TEST_CASE("binomial interval") {
  CHECK(binomial_half_width(50, 100) == doctest::Approx(1.96 * 0.05));
  CHECK(binomial_half_width(0, 10) == 0);
  CHECK_THROWS_AS(binomial_half_width(1, 0), std::invalid_argument);
  auto row = fraction_row("x", "p", 1, 100, 7);
  CHECK(row.estimate == doctest::Approx(0.01));
  CHECK(row.ci_low == 0);
}

TEST_CASE("sampling is reproducible and respects content") {
  const Content c(std::vector<int>{7, 5});
  for (std::uint64_t i = 0; i < 20; ++i) {
    Word w = sample_word(c, 42, i);
    CHECK(content(w) == c);
    CHECK(w == sample_word(c, 42, i));
  }
  CHECK(sample_word(c, 42, 0) != sample_word(c, 42, 1));
  auto a = isolated_fraction(Content(std::vector<int>{8, 8}), 2, 200, 11, 1);
  auto b = isolated_fraction(Content(std::vector<int>{8, 8}), 2, 200, 11, 3);
  CHECK(stats_csv({a}) == stats_csv({b}));
}

TEST_CASE("sampled fractions converge to exhaustive ones") {
  for (const Content& c : {Content(std::vector<int>{6, 6}), Content(std::vector<int>{5, 7})}) {
    auto exact = isolated_fraction_exhaustive(c, 2);
    auto est = isolated_fraction(c, 2, 2000, 3);
    const double h = binomial_half_width(est.hits, est.samples);
    CHECK(std::abs(est.estimate - exact.estimate) <= 3 * h + 1e-12);
  }
}

TEST_CASE("local isolation equals isoterm for n = 2") {
  for (int len = 1; len <= 12; ++len) {
    for (int la = 0; la <= len; ++la) {
      for (const Word& w : words_with_content(Content(std::vector<int>{la, len - la}))) {
        if (len > 10 && (w[0] == 1 || w[len - 1] == 0)) continue;
        CHECK(is_locally_isolated(w, 2) == is_isoterm(w, 2));
      }
    }
  }
}

TEST_CASE("class composition") {
  auto rows = class_composition(10);
  REQUIRE(rows.size() == 11);
  CHECK(rows[5].twins == 4);
  CHECK(rows[5].larger == 0);
  CHECK(rows[5].isoterms == 244);
  for (const auto& r : rows) {
    CHECK(r.words == r.isoterms + 2 * r.twins + (r.words - r.isoterms - 2 * r.twins));
    const auto& mirror = rows[static_cast<std::size_t>(r.lb)];
    CHECK(mirror.isoterms == r.isoterms);
    CHECK(mirror.twins == r.twins);
  }
  auto r22 = class_composition(16);
  for (const auto& r : r22) CHECK(r.classes == r.isoterms + r.twins + r.larger);
}

TEST_CASE("largest class meets the Catalan candidates") {
  for (int l = 5; l <= 9; ++l) {
    auto best = largest_class(l, l);
    BigCount cat = 0;
    for (int r = 2; r + 3 <= l; ++r) {
      const int k = l - 1 - r;
      if (k >= 2) cat = std::max(cat, catalan_family(r, k).size);
    }
    CAPTURE(l);
    CHECK(best.size == class_size(best.interval));
    if (l >= 5) CHECK(best.size == cat);
  }
}

TEST_CASE("csv format") {
  auto row = fraction_row("isolated_n2", "a=3,b=4", 3, 4, 9);
  CHECK(stats_csv({row}) == std::string(kStatsCsvHeader) + "\nisolated_n2,\"a=3,b=4\",0.750000,0.325648,1.000000,4,9\n");
  auto meta = stats_metadata("isolated", {{"samples", 4}});
  CHECK(meta["schema"] == "tropid.stats-meta/1");
}
