#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "progfree/grid.hpp"
#include "progfree/region.hpp"

namespace progfree {

/// Per-member count of unordered pairs {x, z} with x != z and x + z = 2y in
/// the current (mutable) set. A member is a non-mid-point iff its count is 0.
class MidpointIndex {
 public:
  explicit MidpointIndex(const SiteSet& s);

  std::size_t size() const { return alive_count_; }
  bool empty() const { return alive_count_ == 0; }

  /// Representation count of a live member; throws if y is not live.
  long count(const GridPoint& y) const;
  bool is_non_mid_point(const GridPoint& y) const { return count(y) == 0; }

  /// Live members with count 0, sorted lexicographically.
  std::vector<GridPoint> non_mid_points() const;

  /// Live members, sorted.
  std::vector<GridPoint> live_points() const;
  SiteSet live_set() const;

  /// Removes a live member and decrements every affected count.
  void remove(const GridPoint& p);

 private:
  std::int32_t m_, d_;
  std::vector<GridPoint> pts_;
  std::vector<char> alive_;
  std::vector<long> counts_;
  std::size_t alive_count_ = 0;

  std::size_t index_of(const GridPoint& p) const;  // npos when absent/dead
  // All points y of Z_m^d with 2y = x + z (up to 2^d candidates for even m).
  void midpoint_candidates(const GridPoint& x, const GridPoint& z,
                           std::vector<GridPoint>& out) const;

  friend std::vector<long> recount_for_test(const MidpointIndex&);
};

/// Members of S with no representation 2y = x + z, x != z, x, z in S.
SiteSet non_mid_points(const SiteSet& s);

enum class PeelStrategy { Lexicographic, SortedPotential, Random, Relaxed };

std::string strategy_name(PeelStrategy s);
std::optional<PeelStrategy> strategy_from_name(const std::string& name);

/// Replayable record of a peel: the ordered removal list plus whatever
/// remained stuck. The original set is removed + core; the set is reducible
/// iff the core is empty.
struct PeelCertificate {
  std::int32_t m = 1;
  std::int32_t d = 0;
  std::string strategy;
  std::optional<std::uint64_t> seed;
  std::vector<GridPoint> removed;
  std::vector<GridPoint> core;  // sorted

  bool reducible() const { return core.empty(); }
  SiteSet original() const;
};

/// Parameters mapping a 2-dimensional set into the unit square; required by
/// the sorted-potential strategy.
struct PhiContext {
  Rational alpha, beta;
};

/// Repeatedly removes a current non-mid-point chosen by the strategy until
/// none exists.
///
/// SortedPotential requires phi, and every embedded image must lie in the
/// region (std::invalid_argument otherwise); it peels in increasing
/// (a+b, fold(a), a, b) order, which is guaranteed to succeed at every step,
/// and still verifies each removal against the generic counter.
PeelCertificate greedy_peel(const SiteSet& s, PeelStrategy strategy,
                            std::optional<PhiContext> phi = std::nullopt,
                            std::uint64_t seed = 0);

/// Peel allowing removal of points with zero midpoint representations OR
/// zero first/third-term participations in progressions of the current set.
/// Experimental: a relaxed-only-reducible block is not certified for lifting.
PeelCertificate relaxed_peel(const SiteSet& s);

/// True iff the strict greedy peel reaches the empty set.
bool is_reducible(const SiteSet& s);

/// Direct all-subsets check: every non-empty subset contains a non-mid-point
/// of that subset. Refuses sets larger than 20 (std::invalid_argument).
bool exhaustive_reducibility_oracle(const SiteSet& s);

/// Re-replays a certificate: each removal must be admissible under the
/// certificate's strategy rule at its step, and the terminal core must match
/// and be stuck.
bool verify_certificate(const PeelCertificate& cert);

/// The point minimizing (a+b, fold(a), a, b) over a non-empty collection of
/// region members; such a point is always a mod-1 non-mid-point of the
/// collection. Throws std::invalid_argument on empty input or a point
/// outside the region.
UnitPoint min_potential_point(const std::vector<UnitPoint>& pts);

/// Mod-1 sense non-mid-point test on the unit square: no distinct x, z in
/// pts with 2y == x + z (mod 1).
bool is_mod1_non_mid_point(const std::vector<UnitPoint>& pts, const UnitPoint& y);

/// Number of pairs (w, v) in S x S with 2w = y + v and v != y, i.e. the
/// progressions of S having y as first or third term.
long endpoint_count(const SiteSet& s, const GridPoint& y);

}  // namespace progfree
