#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "progfree/rational.hpp"
#include "progfree/region.hpp"

namespace progfree {

/// |region_preimage(m, alpha, beta)| without materializing the set. Uses an
/// integer-scaled membership kernel when the common denominator fits int64,
/// otherwise the generic rational path.
long long preimage_count(std::int32_t m, const Rational& alpha, const Rational& beta);

struct SearchOptions {
  std::optional<Rational> step;  // default 1/(24m)
  bool exhaustive = false;       // scan the whole grid instead of early-exit
  int max_refine_depth = 6;      // halvings tried when the threshold is missed
};

struct SearchResult {
  std::int32_t m = 1;
  Rational alpha, beta;
  long long count = 0;
  Rational threshold;  // 7 m^2 / 24
  bool success = false;  // 24 * count >= 7 * m^2
  Rational step;         // grid step in effect when the result was found
  int refinements = 0;
  long long candidates_evaluated = 0;
  double wall_seconds = 0.0;
};

/// Sweeps the cell-midpoint grid alpha, beta in {(2j+1)*step/2 : 0 <= j <
/// 1/step} for the maximizer of the preimage count. Candidates are visited
/// in lexicographic (alpha, beta) order and only strict improvements are
/// kept, so the reported maximizer is the least among maximal counts. Early
/// exit on reaching ceil(7 m^2 / 24) unless exhaustive; if a full sweep
/// misses the threshold the step is halved, up to max_refine_depth times.
SearchResult grid_search_alpha_beta(std::int32_t m, const SearchOptions& opts = {});

/// The box block {0, ..., floor(m/2)}^2 of Z_m^2; size floor((m+2)/2)^2.
SiteSet box_set(std::int32_t m);

/// The one-dimensional digit block {0, ..., (m-1)/2} of Z_m, odd m only.
SiteSet salem_spencer_digits(std::int32_t m);

struct BoundsRow {
  std::int32_t m = 1;
  long long box_size = 0;
  Rational threshold;            // 7 m^2 / 24
  long long searched_count = 0;  // best grid-search count
  Rational alpha, beta;          // where it was attained
  bool searched_beats_box = false;
  double per_coord_constant = 0.0;  // sqrt(searched_count) / m, display only
};

/// Per-m comparison of the box baseline against the searched preimage count.
std::vector<BoundsRow> bounds_table(std::int32_t m_max);

/// Exact average of the preimage count over all (alpha, beta) in the unit
/// square, integrated over the breakpoint decomposition (the count is
/// piecewise constant in beta and its beta-integral is piecewise linear in
/// alpha, so midpoint sampling between breakpoints is exact).
Rational average_preimage_count(std::int32_t m);

}  // namespace progfree
