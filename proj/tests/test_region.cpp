#include <doctest.h>

#include "progfree/region.hpp"

using namespace progfree;
using region::contains;
using region::contains_by_pieces;
using region::contains_scaled;

namespace {
UnitPoint up(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
  return UnitPoint(Rational(an, ad), Rational(bn, bd));
}
}  // namespace

TEST_CASE("UnitPoint rejects coordinates outside the half-open square") {
  CHECK_THROWS_AS(UnitPoint(Rational(1), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(UnitPoint(Rational(0), Rational(-1, 4)), std::invalid_argument);
  CHECK_NOTHROW(UnitPoint(Rational(0), Rational(0)));
}

TEST_CASE("membership examples with exact boundary semantics") {
  CHECK(region::in_upper(up(1, 4, 3, 4)));
  CHECK(!contains(up(2, 3, 1, 6)));        // a+b = 5/6 and 2a+b = 3/2, both strict
  CHECK(region::in_upper(up(1, 12, 1, 2)));  // a+b = 7/12 closed
  CHECK(!contains(up(1, 2, 5, 6)));        // a = 1/2 excluded from the upper box
  CHECK(region::in_lower(up(7, 12, 1, 12)));
  CHECK(!contains(up(0, 1, 0, 1)));
}

TEST_CASE("corner of the low square is strict in a+b > 5/6") {
  CHECK(!contains(up(5, 12, 5, 12)));       // a+b exactly 5/6: excluded
  CHECK(contains(up(5, 12, 43, 96)));       // a+b = 83/96 > 5/6, both coords < 1/2
  CHECK(!contains(up(5, 12, 13, 32)));      // a+b = 79/96 < 5/6 and above the lower band
}

TEST_CASE("three membership routes agree on dense rational grids") {
  for (int D : {12, 24, 48, 60}) {
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        UnitPoint p(Rational(i, D), Rational(j, D));
        bool a = contains(p);
        bool b = contains_by_pieces(p);
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(D);
        CHECK(a == b);
        if (D % 12 == 0) CHECK(a == contains_scaled(i, j, D));
      }
  }
}

TEST_CASE("scaled kernel agrees off the 12-grid too") {
  const int D = 12 * 7 * 5;  // still divisible by 12
  for (int i = 0; i < D; i += 3)
    for (int j = 0; j < D; j += 3) {
      UnitPoint p(Rational(i, D), Rational(j, D));
      CHECK(contains(p) == contains_scaled(i, j, D));
    }
}

TEST_CASE("areas: 7/24 total, 71/288 + 13/288 parts, two computation routes") {
  CHECK(region::upper_area() == Rational(71, 288));
  CHECK(region::lower_area() == Rational(13, 288));
  CHECK(region::total_area() == Rational(7, 24));
  CHECK(region::upper_area() + region::lower_area() == region::total_area());
  CHECK(region::total_area_by_integration() == Rational(7, 24));
}

TEST_CASE("vertex cycles contain the defining corner points") {
  auto u = region::upper_vertices();
  auto l = region::lower_vertices();
  auto has = [](const std::vector<region::Vertex>& vs, Rational a, Rational b) {
    for (const auto& v : vs)
      if (v.first == a && v.second == b) return true;
    return false;
  };
  CHECK(has(u, Rational(0), Rational(7, 12)));
  CHECK(has(u, Rational(1, 12), Rational(1, 2)));
  CHECK(has(u, Rational(1, 3), Rational(1, 2)));
  CHECK(has(u, Rational(1, 2), Rational(1, 3)));
  CHECK(has(u, Rational(1, 2), Rational(5, 6)));
  CHECK(has(l, Rational(1, 2), Rational(1, 12)));
  CHECK(has(l, Rational(7, 12), Rational(0)));
  CHECK(has(l, Rational(3, 4), Rational(0)));
  CHECK(has(l, Rational(2, 3), Rational(1, 6)));
}

TEST_CASE("boundary edges carry open/closed flags") {
  auto edges = region::boundary_edges();
  CHECK(edges.size() >= 10);
  int solid = 0, dotted = 0;
  for (const auto& e : edges) (e.included ? solid : dotted)++;
  CHECK(solid > 0);
  CHECK(dotted > 0);
}

TEST_CASE("torus embedding examples") {
  CHECK(torus_embed(3, Rational(0), Rational(0), GridPoint(3, {2, 2})) ==
        UnitPoint(Rational(2, 3), Rational(2, 3)));
  CHECK(torus_embed(3, Rational(1, 2), Rational(0), GridPoint(3, {2, 0})) ==
        UnitPoint(Rational(1, 6), Rational(0)));
  CHECK(torus_embed(2, Rational(1, 24), Rational(1, 24), GridPoint(2, {1, 0})) ==
        UnitPoint(Rational(13, 24), Rational(1, 24)));
  CHECK_THROWS_AS(torus_embed(3, Rational(0), Rational(0), GridPoint(3, {1})),
                  std::invalid_argument);
}

TEST_CASE("torus embedding is injective for fixed parameters") {
  const std::int32_t m = 5;
  Rational alpha(3, 7), beta(1, 11);
  std::vector<UnitPoint> seen;
  for (int q = 0; q < m; ++q)
    for (int r = 0; r < m; ++r) {
      UnitPoint p = torus_embed(m, alpha, beta, GridPoint(m, {q, r}));
      for (const auto& s : seen) CHECK(!(s == p));
      seen.push_back(p);
    }
}

TEST_CASE("preimage examples") {
  auto s2 = region_preimage(2, Rational(1, 24), Rational(1, 24));
  REQUIRE(s2.size() == 2);
  CHECK(s2.contains(GridPoint(2, {0, 1})));
  CHECK(s2.contains(GridPoint(2, {1, 0})));

  auto s1 = region_preimage(1, Rational(1, 4), Rational(3, 4));
  REQUIRE(s1.size() == 1);
  CHECK(s1.contains(GridPoint(1, {0, 0})));

  // exhaustive membership over 144 points; 43 exceeds the 7*144/24 = 42 target
  auto s12 = region_preimage(12, Rational(1, 288), Rational(1, 288));
  CHECK(s12.size() == 43);
}

TEST_CASE("preimage membership agrees with per-point embedding") {
  const std::int32_t m = 7;
  Rational alpha(1, 336), beta(5, 336);
  auto s = region_preimage(m, alpha, beta);
  for (int q = 0; q < m; ++q)
    for (int r = 0; r < m; ++r) {
      GridPoint p(m, {q, r});
      CHECK(s.contains(p) == region::contains(torus_embed(m, alpha, beta, p)));
    }
}
