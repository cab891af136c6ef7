#pragma once

#include <vector>

#include "progfree/rational.hpp"

namespace progfree {

struct FactsOptions {
  /// Exhaustive rational grids a = p/D, b = q/D restricted to the region.
  std::vector<int> denominators = {12, 24, 60, 120};
  /// Mod-1 triple checks run only on grids with denominator <= this bound.
  int triple_denominator_max = 24;
};

/// Violation counters for the executable properties of the region:
///  - sum_range:  7/12 <= a+b <= 4/3 for every region point
///  - cross_pair: a + a' < 1 for equal-sum pairs across the two parts
///  - midpoint:   midpoints satisfy a*+b* <= 4/3, and < 13/12 when a* >= 1/2
///  - ap_sum:     2y == x+z (mod 1) implies a_y+b_y >= avg of the two sums
///  - fold:       under equal sums, fold(a_y) >= avg of folds; all-equal
///                folds force x == z
struct FactsReport {
  long long sum_range_checked = 0, sum_range_violations = 0;
  long long cross_pair_checked = 0, cross_pair_violations = 0;
  long long midpoint_checked = 0, midpoint_violations = 0;
  long long ap_sum_checked = 0, ap_sum_violations = 0;
  long long fold_checked = 0, fold_violations = 0;

  long long total_violations() const {
    return sum_range_violations + cross_pair_violations + midpoint_violations +
           ap_sum_violations + fold_violations;
  }
  bool ok() const { return total_violations() == 0; }
};

FactsReport run_facts_suite(const FactsOptions& opts = {});

}  // namespace progfree
