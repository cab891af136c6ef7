#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "progfree/grid.hpp"
#include "progfree/reduce.hpp"

namespace progfree {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when an enumeration or pair scan would exceed its configured
/// budget; carries the exact requirement so callers can report it.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, BigInt required)
      : std::runtime_error(std::move(what)), required(std::move(required)) {}
  BigInt required;
};

/// Raised when lifting a block that is not certified reducible and the
/// override flag is unset.
class UncertifiedBlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the balanced-tuple lift: a d-dimensional block S, a
/// repetition count per block point, and a target dimension n >= the
/// divisible core dimension n' = d * |S| * reps (extra coordinates are
/// zero-padded).
struct LiftSpec {
  SiteSet block;
  int repetitions = 1;
  int target_dim = 0;  // 0 means exactly the core dimension
  bool override_uncertified = false;

  int core_dim() const {
    return block.dimension() * static_cast<int>(block.size()) * repetitions;
  }
  int padded_dim() const { return target_dim > 0 ? target_dim : core_dim(); }
};

/// Number of balanced tuples: the multinomial (reps*|S|)! / (reps!)^|S|.
BigInt lift_size(std::size_t block_size, int repetitions);

/// Lower bounds on the lift size (n = d * |S| * reps):
///   crude:   |S|^(reps*|S|) / (reps*|S| + 1)^|S|
///   refined: |S|^(n/d) / (e^2 * reps)^((|S|-1)/2), reported as an exact
///            rational using the witness 361/48 >= e^2 (half-integer powers
///            are rounded up through an exact integer square root).
struct LiftBounds {
  BigRational crude, refined;
};
LiftBounds lift_bounds(std::size_t block_size, int repetitions, int d);

struct LiftBudget {
  BigInt max_vectors = 1000000;
  BigInt max_pair_checks = BigInt("1000000000000");
};

/// Streams every balanced tuple exactly once, flattened to padded_dim()
/// coordinates (blocks occupy consecutive width-d groups in emission order,
/// then zeros). Emission follows lexicographic order over block-index
/// sequences. Throws BudgetExceeded when lift_size exceeds the vector budget
/// and UncertifiedBlock when the block fails the internal reducibility check
/// without the override flag.
void enumerate_lift(const LiftSpec& spec, const LiftBudget& budget,
                    const std::function<void(const GridPoint&)>& emit);

/// Convenience: the whole lifted set.
SiteSet enumerate_lift(const LiftSpec& spec, const LiftBudget& budget = {});

struct LiftReport {
  BigInt size;
  LiftBounds bounds;
  int core_dim = 0;
  int padding = 0;
  bool progression_free = false;
  std::optional<Progression> witness;
};

/// Enumerates the lift and brute-force scans it for progressions.
LiftReport certify_lift(const LiftSpec& spec, const LiftBudget& budget = {}, int threads = 1);

}  // namespace progfree
