#include "progfree/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace progfree {

namespace {

std::int32_t mod_reduce(std::int64_t v, std::int32_t m) {
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int32_t>(r);
}

// m^d if it fits in 62 bits, else nullopt.
std::optional<std::uint64_t> key_space(std::int32_t m, std::int32_t d) {
  std::uint64_t space = 1;
  for (int i = 0; i < d; ++i) {
    if (space > (std::uint64_t{1} << 62) / std::max<std::int32_t>(m, 1)) return std::nullopt;
    space *= static_cast<std::uint64_t>(m);
  }
  return space;
}

std::uint64_t encode(const GridPoint& p) {
  std::uint64_t k = 0;
  for (std::int32_t c : p.coords) k = k * static_cast<std::uint64_t>(p.m) + static_cast<std::uint64_t>(c);
  return k;
}

}  // namespace

GridPoint::GridPoint(std::int32_t modulus, std::vector<std::int32_t> c)
    : m(modulus), coords(std::move(c)) {
  if (m < 1) throw std::invalid_argument("GridPoint: modulus must be >= 1");
  for (auto& v : coords) v = mod_reduce(v, m);
}

void require_compatible(const GridPoint& a, const GridPoint& b) {
  if (a.m != b.m) throw std::invalid_argument("points have mismatched moduli");
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("points have mismatched dimensions");
}

SiteSet::SiteSet(std::int32_t m, std::int32_t d) : m_(m), d_(d) {
  if (m < 1) throw std::invalid_argument("SiteSet: modulus must be >= 1");
  if (d < 0) throw std::invalid_argument("SiteSet: dimension must be >= 0");
  rebuild_index();
}

SiteSet SiteSet::from_points(std::int32_t m, std::int32_t d, std::vector<GridPoint> pts) {
  SiteSet s(m, d);
  for (auto& p : pts) {
    if (p.m != m) throw std::invalid_argument("SiteSet: point modulus mismatch");
    if (p.dim() != d) throw std::invalid_argument("SiteSet: point dimension mismatch");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  s.points_ = std::move(pts);
  s.rebuild_index();
  return s;
}

SiteSet SiteSet::from_coords(std::int32_t m, std::int32_t d,
                             const std::vector<std::vector<std::int32_t>>& coords) {
  std::vector<GridPoint> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) {
    if (static_cast<std::int32_t>(c.size()) != d)
      throw std::invalid_argument("SiteSet: coordinate tuple has wrong length");
    pts.emplace_back(m, c);
  }
  return from_points(m, d, std::move(pts));
}

void SiteSet::rebuild_index() {
  keys_.clear();
  keyed_ = key_space(m_, d_).has_value();
  if (!keyed_) return;
  keys_.reserve(points_.size() * 2);
  for (const auto& p : points_) keys_.insert(encode(p));
}

bool SiteSet::contains(const GridPoint& p) const {
  if (p.m != m_ || p.dim() != d_) return false;
  if (keyed_) return keys_.count(encode(p)) != 0;
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool is_three_term_progression(const GridPoint& x, const GridPoint& y, const GridPoint& z) {
  require_compatible(x, y);
  require_compatible(y, z);
  if (x == y || y == z || x == z) return false;
  for (int i = 0; i < x.dim(); ++i) {
    std::int64_t v = std::int64_t{x.coords[i]} - 2 * std::int64_t{y.coords[i]} + z.coords[i];
    if (v % x.m != 0) return false;
  }
  return true;
}

bool is_cousin(const GridPoint& x, const GridPoint& y) {
  require_compatible(x, y);
  for (int i = 0; i < x.dim(); ++i) {
    if ((2 * x.coords[i]) % x.m != (2 * y.coords[i]) % x.m) return false;
  }
  return true;
}

std::optional<Progression> find_three_term_progression(const SiteSet& a, int threads) {
  const auto& pts = a.points();
  const std::size_t n = pts.size();
  if (n < 3) return std::nullopt;
  const std::int32_t m = a.modulus();

  // Returns the least (i, j) pair index with a hit in [begin, end), or n*n.
  auto scan_range = [&](std::size_t begin, std::size_t end) -> std::size_t {
    GridPoint zc(m, std::vector<std::int32_t>(a.dimension(), 0));
    for (std::size_t i = begin; i < end; ++i) {
      const GridPoint& x = pts[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const GridPoint& y = pts[j];
        for (int k = 0; k < x.dim(); ++k) {
          std::int64_t v = (2 * std::int64_t{y.coords[k]} - x.coords[k]) % m;
          if (v < 0) v += m;
          zc.coords[k] = static_cast<std::int32_t>(v);
        }
        if (zc == x) continue;  // cousin pair, z == x is not a progression
        if (a.contains(zc)) return i * n + j;
      }
    }
    return n * n;
  };

  std::size_t best = n * n;
  if (threads <= 1) {
    best = scan_range(0, n);
  } else {
    const int nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::size_t> results(nt, n * n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        std::size_t lo = n * t / nt;
        std::size_t hi = n * (t + 1) / nt;
        results[t] = scan_range(lo, hi);
      });
    }
    for (auto& th : pool) th.join();
    for (std::size_t r : results) best = std::min(best, r);
  }

  if (best == n * n) return std::nullopt;
  const GridPoint& x = pts[best / n];
  const GridPoint& y = pts[best % n];
  std::vector<std::int32_t> zc(x.coords.size());
  for (int k = 0; k < x.dim(); ++k)
    zc[k] = mod_reduce(2 * std::int64_t{y.coords[k]} - x.coords[k], m);
  return Progression{x, y, GridPoint(m, std::move(zc))};
}

}  // namespace progfree
