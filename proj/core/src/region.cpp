#include "progfree/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace progfree {

UnitPoint::UnitPoint(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a < Rational(0) || a >= Rational(1) || b < Rational(0) || b >= Rational(1))
    throw std::invalid_argument("UnitPoint: coordinates must lie in [0,1)");
}

namespace region {

namespace {

const Rational kHalf(1, 2);
const Rational k7_12(7, 12);
const Rational k5_6(5, 6);
const Rational k4_3(4, 3);
const Rational k3_2(3, 2);

// One convex piece: a conjunction of half-plane constraints
// ca*a + cb*b (<= | <) rhs.
struct Constraint {
  Rational ca, cb, rhs;
  bool strict;
};

bool satisfies(const std::vector<Constraint>& cs, const UnitPoint& p) {
  for (const auto& c : cs) {
    Rational v = c.ca * p.a + c.cb * p.b;
    if (c.strict ? !(v < c.rhs) : !(v <= c.rhs)) return false;
  }
  return true;
}

// Left slab of the upper part (a <= 1/3): b >= max(1/2, 7/12 - a), b < 1.
const std::vector<Constraint>& piece_upper_left() {
  static const std::vector<Constraint> cs = {
      {-1, 0, 0, false},            // a >= 0
      {0, -1, -kHalf, false},       // b >= 1/2
      {-1, -1, -k7_12, false},      // a + b >= 7/12
      {1, 0, Rational(1, 3), false},  // a <= 1/3
      {0, 1, 1, true},              // b < 1
  };
  return cs;
}

// Right slab of the upper part (1/3 <= a < 1/2): 5/6 < a+b <= 4/3, b < 1.
const std::vector<Constraint>& piece_upper_right() {
  static const std::vector<Constraint> cs = {
      {-1, 0, Rational(-1, 3), false},  // a >= 1/3
      {1, 0, kHalf, true},              // a < 1/2
      {-1, -1, -k5_6, true},            // a + b > 5/6
      {1, 1, k4_3, false},              // a + b <= 4/3
      {0, 1, 1, true},                  // b < 1
  };
  return cs;
}

// The lower part is already convex.
const std::vector<Constraint>& piece_lower() {
  static const std::vector<Constraint> cs = {
      {-1, 0, -kHalf, false},   // a >= 1/2
      {0, -1, 0, false},        // b >= 0
      {-1, -1, -k7_12, false},  // a + b >= 7/12
      {1, 1, k5_6, true},       // a + b < 5/6
      {2, 1, k3_2, true},       // 2a + b < 3/2
  };
  return cs;
}

Rational shoelace(const std::vector<Vertex>& v) {
  Rational twice(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& [x1, y1] = v[i];
    const auto& [x2, y2] = v[(i + 1) % v.size()];
    twice += x1 * y2 - x2 * y1;
  }
  if (twice < Rational(0)) twice = -twice;
  return twice / Rational(2);
}

Rational clamp_len(const Rational& lo, const Rational& hi) {
  if (hi <= lo) return Rational(0);
  return hi - lo;
}

// Measure of { b in [0,1) : (a, b) in region } for fixed a, straight from
// the inequality system (open/closed endpoints carry no measure).
Rational section_length(const Rational& a) {
  Rational len(0);
  if (a < kHalf) {
    // band with b >= 1/2
    Rational lo = std::max(kHalf, k7_12 - a);
    Rational hi = std::min(Rational(1), k4_3 - a);
    len += clamp_len(lo, hi);
    // corner with b < 1/2, a + b > 5/6
    Rational lo2 = std::max(Rational(0), k5_6 - a);
    len += clamp_len(lo2, kHalf);
  } else {
    Rational lo = std::max(Rational(0), k7_12 - a);
    Rational hi = std::min(std::min(kHalf, k5_6 - a), k3_2 - Rational(2) * a);
    len += clamp_len(lo, hi);
  }
  return len;
}

}  // namespace

bool in_upper(const UnitPoint& p) {
  if (p.a >= kHalf) return false;
  Rational s = p.a + p.b;
  if (p.b >= kHalf) return s >= k7_12 && s <= k4_3;
  return s > k5_6;
}

bool in_lower(const UnitPoint& p) {
  if (p.a < kHalf || p.b >= kHalf) return false;
  Rational s = p.a + p.b;
  return s >= k7_12 && s < k5_6 && Rational(2) * p.a + p.b < k3_2;
}

bool contains(const UnitPoint& p) { return in_upper(p) || in_lower(p); }

bool contains_by_pieces(const UnitPoint& p) {
  return satisfies(piece_upper_left(), p) || satisfies(piece_upper_right(), p) ||
         satisfies(piece_lower(), p);
}

bool contains_scaled(std::int64_t a_num, std::int64_t b_num, std::int64_t denom) {
  if (denom <= 0 || denom % 12 != 0) throw std::invalid_argument("contains_scaled: 12 must divide denom");
  const std::int64_t s12 = 12 * (a_num + b_num);  // 12 * (a+b) * denom / denom
  if (2 * a_num < denom) {
    if (2 * b_num >= denom) return s12 >= 7 * denom && s12 <= 16 * denom;
    return s12 > 10 * denom;
  }
  if (2 * b_num >= denom) return false;
  return s12 >= 7 * denom && s12 < 10 * denom && 2 * (2 * a_num + b_num) < 3 * denom;
}

const std::vector<Vertex>& upper_vertices() {
  static const std::vector<Vertex> v = {
      {Rational(0), Rational(1)},         {Rational(0), Rational(7, 12)},
      {Rational(1, 12), Rational(1, 2)},  {Rational(1, 3), Rational(1, 2)},
      {Rational(1, 2), Rational(1, 3)},   {Rational(1, 2), Rational(5, 6)},
      {Rational(1, 3), Rational(1)},
  };
  return v;
}

const std::vector<Vertex>& lower_vertices() {
  static const std::vector<Vertex> v = {
      {Rational(1, 2), Rational(1, 3)},  {Rational(1, 2), Rational(1, 12)},
      {Rational(7, 12), Rational(0)},    {Rational(3, 4), Rational(0)},
      {Rational(2, 3), Rational(1, 6)},
  };
  return v;
}

Rational upper_area() { return shoelace(upper_vertices()); }
Rational lower_area() { return shoelace(lower_vertices()); }
Rational total_area() { return upper_area() + lower_area(); }

Rational total_area_by_integration() {
  // The section length is piecewise linear in a with breakpoints at k/12, so
  // the midpoint rule on each interval [k/12, (k+1)/12] is exact.
  Rational area(0);
  const Rational width(1, 12);
  for (int k = 0; k < 12; ++k) {
    Rational mid(2 * k + 1, 24);
    area += section_length(mid) * width;
  }
  return area;
}

std::vector<BoundaryEdge> boundary_edges() {
  auto v1 = upper_vertices();
  auto v2 = lower_vertices();
  // Closed/open flags per boundary segment, matching the half-open
  // inequality system.
  std::vector<BoundaryEdge> edges;
  auto add = [&edges](const Vertex& a, const Vertex& b, bool inc) {
    edges.push_back({a, b, inc});
  };
  add(v1[0], v1[1], true);   // a = 0
  add(v1[1], v1[2], true);   // a + b = 7/12
  add(v1[2], v1[3], true);   // b = 1/2
  add(v1[3], v1[4], false);  // a + b = 5/6 (strict)
  add(v1[4], v1[5], false);  // a = 1/2 (excluded from the upper part)
  add(v1[5], v1[6], true);   // a + b = 4/3
  add(v1[6], v1[0], false);  // b = 1 (outside the half-open square)
  add(v2[0], v2[1], true);   // a = 1/2
  add(v2[1], v2[2], true);   // a + b = 7/12
  add(v2[2], v2[3], true);   // b = 0
  add(v2[3], v2[4], false);  // 2a + b = 3/2 (strict)
  add(v2[4], v2[0], false);  // a + b = 5/6 (strict)
  return edges;
}

}  // namespace region

UnitPoint torus_embed(std::int32_t m, const Rational& alpha, const Rational& beta,
                      const GridPoint& p) {
  if (p.dim() != 2) throw std::invalid_argument("torus_embed: point must be 2-dimensional");
  if (p.m != m) throw std::invalid_argument("torus_embed: modulus mismatch");
  Rational a = reduce_mod1(alpha + Rational(p.coords[0], m));
  Rational b = reduce_mod1(beta + Rational(p.coords[1], m));
  return UnitPoint(a, b);
}

SiteSet region_preimage(std::int32_t m, const Rational& alpha, const Rational& beta) {
  std::vector<GridPoint> pts;
  for (std::int32_t q = 0; q < m; ++q) {
    for (std::int32_t r = 0; r < m; ++r) {
      GridPoint p(m, {q, r});
      if (region::contains(torus_embed(m, alpha, beta, p))) pts.push_back(std::move(p));
    }
  }
  return SiteSet::from_points(m, 2, std::move(pts));
}

}  // namespace progfree
