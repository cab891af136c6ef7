#include "progfree/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace progfree {

namespace {

// lcm of small positive ints, or nullopt if it exceeds the safe range for
// the scaled membership kernel.
std::optional<std::int64_t> safe_lcm(std::initializer_list<std::int64_t> vals) {
  constexpr std::int64_t limit = std::int64_t{1} << 40;
  std::int64_t l = 1;
  for (std::int64_t v : vals) {
    l = std::lcm(l, v);
    if (l > limit) return std::nullopt;
  }
  return l;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long long preimage_count(std::int32_t m, const Rational& alpha, const Rational& beta) {
  auto denom = safe_lcm({12, m, alpha.den(), beta.den()});
  if (!denom) {
    // Generic exact path for pathological denominators.
    long long count = 0;
    for (std::int32_t q = 0; q < m; ++q)
      for (std::int32_t r = 0; r < m; ++r)
        if (region::contains(torus_embed(m, alpha, beta, GridPoint(m, {q, r})))) ++count;
    return count;
  }
  const std::int64_t D = *denom;
  const std::int64_t unit = D / m;
  const std::int64_t a0 = mod_pos(alpha.num() * (D / alpha.den()), D);
  const std::int64_t b0 = mod_pos(beta.num() * (D / beta.den()), D);
  std::vector<std::int64_t> av(m), bv(m);
  for (std::int32_t q = 0; q < m; ++q) {
    av[q] = (a0 + q * unit) % D;
    bv[q] = (b0 + q * unit) % D;
  }
  long long count = 0;
  for (std::int32_t q = 0; q < m; ++q)
    for (std::int32_t r = 0; r < m; ++r)
      if (region::contains_scaled(av[q], bv[r], D)) ++count;
  return count;
}

SearchResult grid_search_alpha_beta(std::int32_t m, const SearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("grid_search_alpha_beta: modulus must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  SearchResult result;
  result.m = m;
  result.threshold = Rational(7ll * m * m, 24);
  const long long needed = (7ll * m * m + 23) / 24;  // ceil(7 m^2 / 24)

  Rational step = opts.step.value_or(Rational(1, 24ll * m));
  bool have_best = false;

  for (int depth = 0; depth <= opts.max_refine_depth; ++depth) {
    const Rational half_step = step / Rational(2);
    for (Rational alpha = half_step; alpha < Rational(1); alpha += step) {
      for (Rational beta = half_step; beta < Rational(1); beta += step) {
        long long count = preimage_count(m, alpha, beta);
        ++result.candidates_evaluated;
        if (!have_best || count > result.count) {
          have_best = true;
          result.count = count;
          result.alpha = alpha;
          result.beta = beta;
          result.step = step;
        }
        if (!opts.exhaustive && result.count >= needed) goto done;
      }
    }
    if (result.count >= needed) break;
    step = step / Rational(2);
    ++result.refinements;
  }

done:
  result.success = 24 * result.count >= 7ll * m * m;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SiteSet box_set(std::int32_t m) {
  if (m < 1) throw std::invalid_argument("box_set: modulus must be >= 1");
  std::vector<GridPoint> pts;
  for (std::int32_t q = 0; q <= m / 2; ++q)
    for (std::int32_t r = 0; r <= m / 2; ++r) pts.emplace_back(m, std::vector<std::int32_t>{q, r});
  return SiteSet::from_points(m, 2, std::move(pts));
}

SiteSet salem_spencer_digits(std::int32_t m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("salem_spencer_digits: modulus must be odd");
  std::vector<GridPoint> pts;
  for (std::int32_t q = 0; q <= (m - 1) / 2; ++q)
    pts.emplace_back(m, std::vector<std::int32_t>{q});
  return SiteSet::from_points(m, 1, std::move(pts));
}

std::vector<BoundsRow> bounds_table(std::int32_t m_max) {
  if (m_max < 2) throw std::invalid_argument("bounds_table: m_max must be >= 2");
  std::vector<BoundsRow> rows;
  rows.reserve(m_max);
  for (std::int32_t m = 1; m <= m_max; ++m) {
    SearchResult sr = grid_search_alpha_beta(m);
    BoundsRow row;
    row.m = m;
    row.box_size = static_cast<long long>((m + 2) / 2) * ((m + 2) / 2);
    row.threshold = Rational(7ll * m * m, 24);
    row.searched_count = sr.count;
    row.alpha = sr.alpha;
    row.beta = sr.beta;
    row.searched_beats_box = sr.count > row.box_size;
    row.per_coord_constant = std::sqrt(static_cast<double>(sr.count)) / m;
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational average_preimage_count(std::int32_t m) {
  if (m < 1) throw std::invalid_argument("average_preimage_count: modulus must be >= 1");
  const int cells = 12 * m;
  const Rational delta(1, cells);
  Rational total(0);
  for (int k = 0; k < cells; ++k) {
    const Rational alpha = Rational(2 * k + 1) / Rational(2 * cells);
    // Beta breakpoints: the count can only change where some membership
    // threshold in b, a+b or 2a+b is crossed.
    std::vector<Rational> cuts;
    cuts.reserve(3 * cells + 1);
    for (int j = 0; j < cells; ++j) {
      Rational base(j, cells);
      cuts.push_back(base);
      cuts.push_back(reduce_mod1(base - alpha));
      cuts.push_back(reduce_mod1(base - Rational(2) * alpha));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(Rational(1));

    Rational column(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational len = cuts[i + 1] - cuts[i];
      if (len == Rational(0)) continue;
      const Rational beta = (cuts[i] + cuts[i + 1]) / Rational(2);
      column += Rational(preimage_count(m, alpha, beta)) * len;
    }
    total += column * delta;
  }
  return total;
}

}  // namespace progfree
