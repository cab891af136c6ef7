#include "progfree/facts.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "progfree/region.hpp"

namespace progfree {

namespace {

struct SamplePoint {
  std::int64_t p, q;  // coordinates p/D, q/D
  bool upper;         // which part of the region it belongs to
};

std::int64_t fold_scaled(std::int64_t n, std::int64_t denom) {
  // half_fold on n/denom, numerator result over the same denom; requires
  // denom even.
  return n < denom / 2 ? n : n - denom / 2;
}

}  // namespace

FactsReport run_facts_suite(const FactsOptions& opts) {
  FactsReport report;

  for (int denom : opts.denominators) {
    if (denom % 12 != 0)
      throw std::invalid_argument("facts suite: denominators must be multiples of 12");
    const std::int64_t D = denom;

    std::vector<SamplePoint> sample;
    for (std::int64_t p = 0; p < D; ++p) {
      for (std::int64_t q = 0; q < D; ++q) {
        if (!region::contains_scaled(p, q, D)) continue;
        UnitPoint u{Rational(p, D), Rational(q, D)};
        sample.push_back({p, q, region::in_upper(u)});
      }
    }

    // Sum range: 7/12 <= a+b <= 4/3 everywhere in the region.
    for (const auto& s : sample) {
      ++report.sum_range_checked;
      std::int64_t s12 = 12 * (s.p + s.q);
      if (!(s12 >= 7 * D && s12 <= 16 * D)) ++report.sum_range_violations;
    }

    // Cross pairs: equal sums across the two parts force a + a' < 1.
    {
      std::map<std::int64_t, std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
          by_sum;  // sum -> (upper a-numerators, lower a-numerators)
      for (const auto& s : sample) {
        auto& bucket = by_sum[s.p + s.q];
        (s.upper ? bucket.first : bucket.second).push_back(s.p);
      }
      for (const auto& [sum, bucket] : by_sum) {
        for (std::int64_t pu : bucket.first) {
          for (std::int64_t pl : bucket.second) {
            ++report.cross_pair_checked;
            if (!(pu + pl < D)) ++report.cross_pair_violations;
          }
        }
      }
    }

    // Midpoints of region pairs: a*+b* <= 4/3, and < 13/12 once a* >= 1/2.
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = i; j < sample.size(); ++j) {
        ++report.midpoint_checked;
        const std::int64_t pa = sample[i].p + sample[j].p;  // 2D * a*
        const std::int64_t sum = pa + sample[i].q + sample[j].q;  // 2D * (a*+b*)
        bool ok = 3 * sum <= 8 * D;
        if (pa >= D && !(6 * sum < 13 * D)) ok = false;
        if (!ok) ++report.midpoint_violations;
      }
    }

    if (denom > opts.triple_denominator_max) continue;

    // Mod-1 triples: for x, z in the sample, every y in the region with
    // 2y == x+z (mod 1) has coordinates over denominator 2D; enumerate the
    // four candidates directly.
    const std::int64_t D2 = 2 * D;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = i; j < sample.size(); ++j) {
        const auto& x = sample[i];
        const auto& z = sample[j];
        const std::int64_t base_a = (x.p + z.p) % D2;
        const std::int64_t base_b = (x.q + z.q) % D2;
        const std::int64_t sum_x = x.p + x.q;
        const std::int64_t sum_z = z.p + z.q;
        for (int da = 0; da < 2; ++da) {
          for (int db = 0; db < 2; ++db) {
            const std::int64_t na = (base_a + da * D) % D2;
            const std::int64_t nb = (base_b + db * D) % D2;
            if (!region::contains_scaled(na, nb, D2)) continue;

            ++report.ap_sum_checked;
            // a_y + b_y >= (a_x+b_x)/2 + (a_z+b_z)/2, all over denominator 2D.
            if (!(na + nb >= sum_x + sum_z)) ++report.ap_sum_violations;

            if (sum_x == sum_z) {
              ++report.fold_checked;
              const std::int64_t fy = fold_scaled(na, D2);
              const std::int64_t fx = fold_scaled(2 * x.p, D2);
              const std::int64_t fz = fold_scaled(2 * z.p, D2);
              bool ok = 2 * fy >= fx + fz;
              if (ok && fy == fx && fy == fz) {
                // all folds equal forces x == z
                ok = (x.p == z.p && x.q == z.q);
              }
              if (!ok) ++report.fold_violations;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace progfree
