#include <doctest.h>

#include "progfree/reduce.hpp"
#include "progfree/search.hpp"

using namespace progfree;

TEST_CASE("preimage_count matches materialized preimages") {
  for (std::int32_t m : {1, 2, 3, 5, 8, 12}) {
    for (int i = 0; i < 5; ++i) {
      Rational alpha(2 * i + 1, 48 * m), beta(3 * i + 1, 96 * m);
      CHECK(preimage_count(m, alpha, beta) ==
            static_cast<long long>(region_preimage(m, alpha, beta).size()));
    }
  }
  // a denominator that defeats the scaled kernel's lcm budget exercises the
  // generic rational path
  Rational awkward(1, (1LL << 31) - 1);
  CHECK(preimage_count(3, awkward, awkward) ==
        static_cast<long long>(region_preimage(3, awkward, awkward).size()));
}

TEST_CASE("grid search meets the 7m^2/24 threshold at small m") {
  for (std::int32_t m : {1, 2, 3, 4, 12}) {
    auto r = grid_search_alpha_beta(m);
    CAPTURE(m);
    CHECK(r.success);
    CHECK(24 * r.count >= 7LL * m * m);
    // independent recomputation of the reported count
    CHECK(r.count == static_cast<long long>(region_preimage(m, r.alpha, r.beta).size()));
  }
}

TEST_CASE("grid search specific counts") {
  auto r2 = grid_search_alpha_beta(2);
  CHECK(r2.count == 2);  // the per-column argument caps m=2 at 2
  auto r1 = grid_search_alpha_beta(1);
  CHECK(r1.count == 1);
  auto r12 = grid_search_alpha_beta(12);
  CHECK(r12.count >= 42);
}

TEST_CASE("exhaustive mode returns the least maximizer deterministically") {
  SearchOptions opts;
  opts.exhaustive = true;
  auto a = grid_search_alpha_beta(3, opts);
  auto b = grid_search_alpha_beta(3, opts);
  CHECK(a.alpha == b.alpha);
  CHECK(a.beta == b.beta);
  CHECK(a.count == b.count);
  CHECK(a.count >= grid_search_alpha_beta(3).count);
}

TEST_CASE("box_set examples") {
  CHECK(box_set(3).size() == 4);
  CHECK(box_set(4).size() == 9);
  CHECK(box_set(2).size() == 4);
  for (std::int32_t m = 1; m <= 12; ++m) {
    long long half = (m + 2) / 2;
    CHECK(static_cast<long long>(box_set(m).size()) == half * half);
  }
}

TEST_CASE("salem_spencer_digits examples") {
  CHECK(salem_spencer_digits(5).size() == 3);
  CHECK(salem_spencer_digits(3).size() == 2);
  CHECK(salem_spencer_digits(7).size() == 4);
  CHECK(is_reducible(salem_spencer_digits(5)));
  CHECK_THROWS_AS(salem_spencer_digits(6), std::invalid_argument);
}

TEST_CASE("box sets and searched preimages peel to empty") {
  for (std::int32_t m = 1; m <= 16; ++m) {
    CHECK(greedy_peel(box_set(m), PeelStrategy::Lexicographic).reducible());
    auto r = grid_search_alpha_beta(m);
    auto s = region_preimage(m, r.alpha, r.beta);
    CHECK(greedy_peel(s, PeelStrategy::Lexicographic).reducible());
  }
}

TEST_CASE("bounds_table rows") {
  auto rows = bounds_table(25);
  REQUIRE(rows.size() == 25);
  const auto& r2 = rows[1];
  CHECK(r2.box_size == 4);
  CHECK(r2.searched_count == 2);
  CHECK(!r2.searched_beats_box);
  const auto& r24 = rows[23];
  CHECK(r24.box_size == 169);
  CHECK(r24.threshold == Rational(168));
  const auto& r25 = rows[24];
  CHECK(r25.box_size == 169);
  CHECK(r25.threshold == Rational(7 * 625, 24));
  CHECK(r25.searched_count >= 183);
  CHECK(r25.searched_beats_box);
}

TEST_CASE("exact average preimage count is (7/24) m^2") {
  for (std::int32_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(average_preimage_count(m) == Rational(7, 24) * Rational(m) * Rational(m));
  }
}
