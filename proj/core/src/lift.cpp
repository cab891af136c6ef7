#include "progfree/lift.hpp"

#include <algorithm>

namespace progfree {

namespace mp = boost::multiprecision;

BigInt lift_size(std::size_t block_size, int repetitions) {
  if (block_size < 1) throw std::invalid_argument("lift_size: empty block");
  if (repetitions < 1) throw std::invalid_argument("lift_size: repetitions must be >= 1");
  const unsigned total = static_cast<unsigned>(block_size) * static_cast<unsigned>(repetitions);
  BigInt num = 1;
  for (unsigned k = 2; k <= total; ++k) num *= k;
  BigInt fact_reps = 1;
  for (int k = 2; k <= repetitions; ++k) fact_reps *= k;
  BigInt den = 1;
  for (std::size_t i = 0; i < block_size; ++i) den *= fact_reps;
  return num / den;
}

namespace {

// Smallest rational >= sqrt(v), via integer square roots.
BigRational rational_sqrt_upper(const BigRational& v) {
  BigInt p = mp::numerator(v);
  BigInt q = mp::denominator(v);
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt pq = p * q;
  BigInt r = mp::sqrt(pq);
  if (r * r < pq) ++r;
  return BigRational(r, q);
}

BigInt pow_int(BigInt base, unsigned exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

BigRational pow_rat(const BigRational& base, unsigned exp) {
  return BigRational(pow_int(mp::numerator(base), exp), pow_int(mp::denominator(base), exp));
}

}  // namespace

LiftBounds lift_bounds(std::size_t block_size, int repetitions, int d) {
  if (block_size < 2) throw std::invalid_argument("lift_bounds: block size must be >= 2");
  if (repetitions < 1 || d < 1) throw std::invalid_argument("lift_bounds: bad parameters");
  const unsigned s = static_cast<unsigned>(block_size);
  const unsigned total = s * static_cast<unsigned>(repetitions);  // reps * |S| = n/d

  LiftBounds out;
  out.crude = BigRational(pow_int(s, total), pow_int(BigInt(total) + 1, s));

  // (e^2 * reps)^((s-1)/2) with e^2 <= 361/48; over-estimating the divisor
  // keeps the reported bound valid.
  const BigRational e2_reps = BigRational(361 * repetitions, 48);
  BigRational divisor;
  if ((s - 1) % 2 == 0) {
    divisor = pow_rat(e2_reps, (s - 1) / 2);
  } else {
    divisor = rational_sqrt_upper(pow_rat(e2_reps, s - 1));
  }
  out.refined = BigRational(pow_int(s, total)) / divisor;
  return out;
}

namespace {

void require_certified(const LiftSpec& spec) {
  if (spec.override_uncertified) return;
  PeelCertificate cert = greedy_peel(spec.block, PeelStrategy::Lexicographic);
  if (!cert.reducible())
    throw UncertifiedBlock(
        "block is not non-mid-point reducible (core of " + std::to_string(cert.core.size()) +
        " points); pass the override to lift anyway");
}

}  // namespace

void enumerate_lift(const LiftSpec& spec, const LiftBudget& budget,
                    const std::function<void(const GridPoint&)>& emit) {
  const SiteSet& block = spec.block;
  if (block.empty()) throw std::invalid_argument("enumerate_lift: empty block");
  if (spec.repetitions < 1) throw std::invalid_argument("enumerate_lift: repetitions must be >= 1");
  const int n = spec.padded_dim();
  if (n < spec.core_dim())
    throw std::invalid_argument("enumerate_lift: target dimension below the core dimension");

  BigInt count = lift_size(block.size(), spec.repetitions);
  if (count > budget.max_vectors)
    throw BudgetExceeded("lift enumeration would produce " + count.str() +
                             " vectors, over the budget of " + budget.max_vectors.str(),
                         count);
  require_certified(spec);

  const int d = block.dimension();
  const std::size_t s = block.size();
  const int slots = static_cast<int>(s) * spec.repetitions;

  std::vector<int> remaining(s, spec.repetitions);
  std::vector<std::int32_t> coords(n, 0);

  // Depth-first multiset permutation in lexicographic block-index order.
  std::function<void(int)> rec = [&](int slot) {
    if (slot == slots) {
      emit(GridPoint(block.modulus(), coords));
      return;
    }
    for (std::size_t i = 0; i < s; ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      const auto& bc = block.points()[i].coords;
      std::copy(bc.begin(), bc.end(), coords.begin() + slot * d);
      rec(slot + 1);
      ++remaining[i];
    }
  };
  rec(0);
}

SiteSet enumerate_lift(const LiftSpec& spec, const LiftBudget& budget) {
  std::vector<GridPoint> pts;
  enumerate_lift(spec, budget, [&pts](const GridPoint& p) { pts.push_back(p); });
  return SiteSet::from_points(spec.block.modulus(), spec.padded_dim(), std::move(pts));
}

LiftReport certify_lift(const LiftSpec& spec, const LiftBudget& budget, int threads) {
  LiftReport report;
  report.size = lift_size(spec.block.size(), spec.repetitions);
  if (spec.block.size() >= 2)
    report.bounds = lift_bounds(spec.block.size(), spec.repetitions, spec.block.dimension());
  report.core_dim = spec.core_dim();
  report.padding = spec.padded_dim() - spec.core_dim();

  BigInt pair_checks = report.size * report.size;
  if (pair_checks > budget.max_pair_checks)
    throw BudgetExceeded("progression scan needs " + pair_checks.str() +
                             " pair checks, over the budget of " + budget.max_pair_checks.str(),
                         pair_checks);

  SiteSet lifted = enumerate_lift(spec, budget);
  report.witness = find_three_term_progression(lifted, threads);
  report.progression_free = !report.witness.has_value();
  return report;
}

}  // namespace progfree
