#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "progfree/grid.hpp"
#include "progfree/rational.hpp"

namespace progfree {

/// A point of the half-open unit square [0,1)^2 with exact coordinates.
struct UnitPoint {
  Rational a, b;

  UnitPoint() = default;
  UnitPoint(Rational a_, Rational b_);

  friend bool operator==(const UnitPoint& p, const UnitPoint& q) {
    return p.a == q.a && p.b == q.b;
  }
  friend std::strong_ordering operator<=>(const UnitPoint& p, const UnitPoint& q) {
    if (auto c = p.a <=> q.a; c != 0) return c;
    return p.b <=> q.b;
  }
};

/// The fixed region of the unit square whose finite subsets always contain a
/// mod-1 non-mid-point. It is the union of two parts: an upper-left polygon
/// (a < 1/2) and a lower-right polygon (a >= 1/2), each cut out by half-open
/// linear inequalities.
namespace region {

/// Upper part: on [0,1/2) x [1/2,1) the band 7/12 <= a+b <= 4/3, plus the
/// corner of [0,1/2)^2 with a+b > 5/6.
bool in_upper(const UnitPoint& p);

/// Lower part: on [1/2,1) x [0,1/2) the set 7/12 <= a+b < 5/6, 2a+b < 3/2.
bool in_lower(const UnitPoint& p);

bool contains(const UnitPoint& p);

/// Same membership computed from a decomposition into three convex polygons
/// with per-edge open/closed flags. Independent of the inequality route; the
/// two must agree at every rational point.
bool contains_by_pieces(const UnitPoint& p);

/// Exact membership for a = aN/D, b = bN/D with 0 <= aN, bN < D and 12 | D.
/// Integer-only kernel used in hot loops; agrees with contains().
bool contains_scaled(std::int64_t a_num, std::int64_t b_num, std::int64_t denom);

using Vertex = std::pair<Rational, Rational>;

/// Boundary vertex cycles (counterclockwise). Some vertices lie outside the
/// half-open square (b = 1); they delimit the closure, not members.
const std::vector<Vertex>& upper_vertices();
const std::vector<Vertex>& lower_vertices();

/// Exact areas by the shoelace formula over the vertex cycles.
Rational upper_area();
Rational lower_area();
Rational total_area();

/// Exact area by integrating the b-section length of the inequality system
/// over a. Independent of the shoelace route.
Rational total_area_by_integration();

struct BoundaryEdge {
  Vertex from, to;
  bool included;  // closed (solid) vs open (dotted) boundary segment
};
std::vector<BoundaryEdge> boundary_edges();

}  // namespace region

/// The torus embedding of Z_m^2: sends (q, r) to the unique point of [0,1)^2
/// congruent to (alpha + q/m, beta + r/m) mod 1. Injective for fixed
/// (alpha, beta). Requires a 2-dimensional point.
UnitPoint torus_embed(std::int32_t m, const Rational& alpha, const Rational& beta,
                      const GridPoint& p);

/// The preimage of the region under the torus embedding: all (q, r) in Z_m^2
/// whose image lies in the region. Exact membership per point.
SiteSet region_preimage(std::int32_t m, const Rational& alpha, const Rational& beta);

}  // namespace progfree
