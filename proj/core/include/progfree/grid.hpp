#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace progfree {

/// A point of Z_m^d: a modulus and a tuple of residues, each in [0, m).
struct GridPoint {
  std::int32_t m = 1;
  std::vector<std::int32_t> coords;

  GridPoint() = default;
  GridPoint(std::int32_t modulus, std::vector<std::int32_t> c);

  int dim() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.m == b.m && a.coords == b.coords;
  }
  // Lexicographic on coordinates (points are only compared within one Z_m^d).
  friend std::strong_ordering operator<=>(const GridPoint& a, const GridPoint& b) {
    return a.coords <=> b.coords;
  }
};

/// Throws std::invalid_argument unless both points share m and dimension.
void require_compatible(const GridPoint& a, const GridPoint& b);

/// A duplicate-free subset of Z_m^d with exact membership lookup.
///
/// Points are kept sorted lexicographically; when m^d fits in 63 bits the
/// membership index is a hash set over base-m encodings, otherwise binary
/// search over the sorted list.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::int32_t m, std::int32_t d);

  /// Reduces coordinates into [0, m), removes duplicates, sorts.
  static SiteSet from_points(std::int32_t m, std::int32_t d, std::vector<GridPoint> pts);
  static SiteSet from_coords(std::int32_t m, std::int32_t d,
                             const std::vector<std::vector<std::int32_t>>& coords);

  std::int32_t modulus() const { return m_; }
  std::int32_t dimension() const { return d_; }
  const std::vector<GridPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool contains(const GridPoint& p) const;

  friend bool operator==(const SiteSet& a, const SiteSet& b) {
    return a.m_ == b.m_ && a.d_ == b.d_ && a.points_ == b.points_;
  }

 private:
  std::int32_t m_ = 1;
  std::int32_t d_ = 0;
  std::vector<GridPoint> points_;
  bool keyed_ = false;
  std::unordered_set<std::uint64_t> keys_;

  void rebuild_index();
};

/// True iff x - 2y + z == 0 coordinatewise mod m and x, y, z are pairwise
/// distinct.
bool is_three_term_progression(const GridPoint& x, const GridPoint& y, const GridPoint& z);

/// True iff 2x == 2y coordinatewise mod m. For odd m this forces x == y.
bool is_cousin(const GridPoint& x, const GridPoint& y);

struct Progression {
  GridPoint x, y, z;
};

/// Finds a three-term progression in A, or nullopt if none exists.
///
/// Scans ordered pairs (x, y), x != y, in lexicographic order and tests
/// z = 2y - x for membership with z != x (the cousin case x == z is not a
/// progression). The reported triple is the least in scan order regardless
/// of the number of worker threads.
std::optional<Progression> find_three_term_progression(const SiteSet& a, int threads = 1);

}  // namespace progfree
