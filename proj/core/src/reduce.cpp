#include "progfree/reduce.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace progfree {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

MidpointIndex::MidpointIndex(const SiteSet& s)
    : m_(s.modulus()), d_(s.dimension()), pts_(s.points()) {
  alive_.assign(pts_.size(), 1);
  counts_.assign(pts_.size(), 0);
  alive_count_ = pts_.size();
  std::vector<GridPoint> cands;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    for (std::size_t j = i + 1; j < pts_.size(); ++j) {
      midpoint_candidates(pts_[i], pts_[j], cands);
      for (const auto& y : cands) {
        std::size_t k = index_of(y);
        if (k != npos) ++counts_[k];
      }
    }
  }
}

std::size_t MidpointIndex::index_of(const GridPoint& p) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  if (it == pts_.end() || !(*it == p)) return npos;
  std::size_t k = static_cast<std::size_t>(it - pts_.begin());
  return alive_[k] ? k : npos;
}

void MidpointIndex::midpoint_candidates(const GridPoint& x, const GridPoint& z,
                                        std::vector<GridPoint>& out) const {
  out.clear();
  // Coordinatewise solutions of 2*y == x + z (mod m): unique for odd m, zero
  // or two per coordinate for even m.
  std::vector<std::vector<std::int32_t>> per_coord(d_);
  for (int i = 0; i < d_; ++i) {
    std::int64_t sum = std::int64_t{x.coords[i]} + z.coords[i];
    if (m_ % 2 == 1) {
      per_coord[i].push_back(static_cast<std::int32_t>(((m_ + 1) / 2 * (sum % m_)) % m_));
    } else {
      if (sum % 2 != 0) return;  // no solution in this coordinate
      std::int32_t y0 = static_cast<std::int32_t>((sum / 2) % m_);
      per_coord[i].push_back(y0);
      per_coord[i].push_back(static_cast<std::int32_t>((y0 + m_ / 2) % m_));
    }
  }
  std::vector<std::int32_t> c(d_, 0);
  std::vector<std::size_t> pick(d_, 0);
  while (true) {
    for (int i = 0; i < d_; ++i) c[i] = per_coord[i][pick[i]];
    out.emplace_back(m_, c);
    int i = d_ - 1;
    while (i >= 0) {
      if (++pick[i] < per_coord[i].size()) break;
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
    if (d_ == 0) break;
  }
  if (d_ == 0) out.clear();  // Z_m^0 has a single point; no pairs exist anyway
}

long MidpointIndex::count(const GridPoint& y) const {
  std::size_t k = index_of(y);
  if (k == npos) throw std::invalid_argument("MidpointIndex: point is not a live member");
  return counts_[k];
}

std::vector<GridPoint> MidpointIndex::non_mid_points() const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (alive_[i] && counts_[i] == 0) out.push_back(pts_[i]);
  return out;
}

std::vector<GridPoint> MidpointIndex::live_points() const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (alive_[i]) out.push_back(pts_[i]);
  return out;
}

SiteSet MidpointIndex::live_set() const { return SiteSet::from_points(m_, d_, live_points()); }

void MidpointIndex::remove(const GridPoint& p) {
  std::size_t k = index_of(p);
  if (k == npos) throw std::invalid_argument("MidpointIndex: removing a non-member");
  alive_[k] = 0;
  --alive_count_;
  std::vector<GridPoint> cands;
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    if (!alive_[j]) continue;
    midpoint_candidates(pts_[k], pts_[j], cands);
    for (const auto& y : cands) {
      std::size_t i = index_of(y);
      if (i != npos) --counts_[i];
    }
  }
}

SiteSet non_mid_points(const SiteSet& s) {
  MidpointIndex idx(s);
  return SiteSet::from_points(s.modulus(), s.dimension(), idx.non_mid_points());
}

std::string strategy_name(PeelStrategy s) {
  switch (s) {
    case PeelStrategy::Lexicographic: return "lexicographic";
    case PeelStrategy::SortedPotential: return "sorted_potential";
    case PeelStrategy::Random: return "random";
    case PeelStrategy::Relaxed: return "relaxed";
  }
  return "unknown";
}

std::optional<PeelStrategy> strategy_from_name(const std::string& name) {
  if (name == "lexicographic") return PeelStrategy::Lexicographic;
  if (name == "sorted_potential" || name == "sorted-potential") return PeelStrategy::SortedPotential;
  if (name == "random") return PeelStrategy::Random;
  if (name == "relaxed") return PeelStrategy::Relaxed;
  return std::nullopt;
}

SiteSet PeelCertificate::original() const {
  std::vector<GridPoint> all = removed;
  all.insert(all.end(), core.begin(), core.end());
  return SiteSet::from_points(m, d, std::move(all));
}

namespace {

struct PotentialKey {
  Rational sum, fold, a, b;
  friend bool operator<(const PotentialKey& x, const PotentialKey& y) {
    if (x.sum != y.sum) return x.sum < y.sum;
    if (x.fold != y.fold) return x.fold < y.fold;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

PotentialKey potential_key(const UnitPoint& p) {
  return PotentialKey{p.a + p.b, half_fold(p.a), p.a, p.b};
}

PeelCertificate sorted_potential_peel(const SiteSet& s, const PhiContext& phi) {
  if (s.dimension() != 2)
    throw std::invalid_argument("sorted_potential peel requires a 2-dimensional set");
  std::vector<std::pair<PotentialKey, GridPoint>> order;
  order.reserve(s.size());
  for (const auto& p : s.points()) {
    UnitPoint u = torus_embed(s.modulus(), phi.alpha, phi.beta, p);
    if (!region::contains(u))
      throw std::invalid_argument("sorted_potential peel: embedded image lies outside the region");
    order.emplace_back(potential_key(u), p);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  PeelCertificate cert;
  cert.m = s.modulus();
  cert.d = s.dimension();
  cert.strategy = strategy_name(PeelStrategy::SortedPotential);
  MidpointIndex idx(s);
  for (const auto& [key, p] : order) {
    // The minimal-potential point is always removable; keep the generic
    // counter as a safety net anyway.
    if (idx.count(p) != 0)
      throw std::runtime_error("sorted_potential peel: counter disagrees with the potential order");
    idx.remove(p);
    cert.removed.push_back(p);
  }
  return cert;
}

}  // namespace

PeelCertificate greedy_peel(const SiteSet& s, PeelStrategy strategy,
                            std::optional<PhiContext> phi, std::uint64_t seed) {
  if (strategy == PeelStrategy::Relaxed) return relaxed_peel(s);
  if (strategy == PeelStrategy::SortedPotential) {
    if (!phi)
      throw std::invalid_argument("sorted_potential peel requires alpha/beta context");
    return sorted_potential_peel(s, *phi);
  }

  PeelCertificate cert;
  cert.m = s.modulus();
  cert.d = s.dimension();
  cert.strategy = strategy_name(strategy);
  if (strategy == PeelStrategy::Random) cert.seed = seed;

  std::mt19937_64 rng(seed);
  MidpointIndex idx(s);
  while (!idx.empty()) {
    std::vector<GridPoint> candidates = idx.non_mid_points();
    if (candidates.empty()) break;
    const GridPoint* pick = &candidates.front();
    if (strategy == PeelStrategy::Random)
      pick = &candidates[rng() % candidates.size()];
    idx.remove(*pick);
    cert.removed.push_back(*pick);
  }
  cert.core = idx.live_points();
  return cert;
}

PeelCertificate relaxed_peel(const SiteSet& s) {
  PeelCertificate cert;
  cert.m = s.modulus();
  cert.d = s.dimension();
  cert.strategy = strategy_name(PeelStrategy::Relaxed);

  MidpointIndex idx(s);
  while (!idx.empty()) {
    SiteSet live = idx.live_set();
    const GridPoint* pick = nullptr;
    for (const auto& p : live.points()) {
      if (idx.count(p) == 0 || endpoint_count(live, p) == 0) {
        pick = &p;
        break;  // lexicographic least removable
      }
    }
    if (!pick) break;
    idx.remove(*pick);
    cert.removed.push_back(*pick);
  }
  cert.core = idx.live_points();
  return cert;
}

bool is_reducible(const SiteSet& s) {
  return greedy_peel(s, PeelStrategy::Lexicographic).reducible();
}

bool exhaustive_reducibility_oracle(const SiteSet& s) {
  const std::size_t n = s.size();
  if (n > 20)
    throw std::invalid_argument("exhaustive_reducibility_oracle: set larger than 20 points");
  if (n == 0) return true;

  const auto& pts = s.points();
  // mids[i][j]: member indices y with 2y = pts[i] + pts[j].
  std::vector<std::vector<std::vector<std::size_t>>> mids(n,
      std::vector<std::vector<std::size_t>>(n));
  {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // Solve coordinatewise, same rule as the incremental counter.
        const GridPoint& x = pts[i];
        const GridPoint& z = pts[j];
        std::vector<std::vector<std::int32_t>> per_coord(x.dim());
        bool any = true;
        for (int c = 0; c < x.dim(); ++c) {
          std::int64_t sum = std::int64_t{x.coords[c]} + z.coords[c];
          std::int32_t m = x.m;
          if (m % 2 == 1) {
            per_coord[c].push_back(static_cast<std::int32_t>(((m + 1) / 2 * (sum % m)) % m));
          } else if (sum % 2 == 0) {
            std::int32_t y0 = static_cast<std::int32_t>((sum / 2) % m);
            per_coord[c] = {y0, static_cast<std::int32_t>((y0 + m / 2) % m)};
          } else {
            any = false;
            break;
          }
        }
        if (!any) continue;
        std::vector<std::size_t> pick(x.dim(), 0);
        while (true) {
          std::vector<std::int32_t> coords(x.dim());
          for (int c = 0; c < x.dim(); ++c) coords[c] = per_coord[c][pick[c]];
          GridPoint y(x.m, coords);
          auto it = std::lower_bound(pts.begin(), pts.end(), y);
          if (it != pts.end() && *it == y)
            mids[i][j].push_back(static_cast<std::size_t>(it - pts.begin()));
          int c = x.dim() - 1;
          while (c >= 0 && ++pick[c] >= per_coord[c].size()) pick[c--] = 0;
          if (c < 0) break;
        }
      }
    }
  }

  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t midpoints = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        for (std::size_t y : mids[i][j]) midpoints |= (1u << y);
      }
    }
    if ((mask & ~midpoints) == 0) return false;  // every member is a midpoint
  }
  return true;
}

bool verify_certificate(const PeelCertificate& cert) {
  const bool relaxed = cert.strategy == strategy_name(PeelStrategy::Relaxed);
  SiteSet original = cert.original();
  if (original.size() != cert.removed.size() + cert.core.size()) return false;  // duplicates

  MidpointIndex idx(original);
  for (const auto& p : cert.removed) {
    if (!original.contains(p)) return false;
    long c;
    try {
      c = idx.count(p);
    } catch (const std::invalid_argument&) {
      return false;  // removed twice
    }
    bool admissible = (c == 0);
    if (!admissible && relaxed) admissible = (endpoint_count(idx.live_set(), p) == 0);
    if (!admissible) return false;
    idx.remove(p);
  }

  std::vector<GridPoint> remaining = idx.live_points();
  std::vector<GridPoint> core = cert.core;
  std::sort(core.begin(), core.end());
  if (remaining != core) return false;

  // The terminal core must be stuck under the certificate's rule.
  SiteSet live = idx.live_set();
  for (const auto& p : remaining) {
    if (idx.count(p) == 0) return false;
    if (relaxed && endpoint_count(live, p) == 0) return false;
  }
  return true;
}

UnitPoint min_potential_point(const std::vector<UnitPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("min_potential_point: empty input");
  const UnitPoint* best = nullptr;
  PotentialKey best_key{};
  for (const auto& p : pts) {
    if (!region::contains(p))
      throw std::invalid_argument("min_potential_point: point outside the region");
    PotentialKey k = potential_key(p);
    if (!best || k < best_key) {
      best = &p;
      best_key = k;
    }
  }
  return *best;
}

bool is_mod1_non_mid_point(const std::vector<UnitPoint>& pts, const UnitPoint& y) {
  auto member = [&pts](const UnitPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
  };
  for (const auto& x : pts) {
    UnitPoint z(reduce_mod1(Rational(2) * y.a - x.a), reduce_mod1(Rational(2) * y.b - x.b));
    if (z == x) continue;  // needs distinct x, z
    if (member(z)) return false;
  }
  return true;
}

long endpoint_count(const SiteSet& s, const GridPoint& y) {
  if (y.m != s.modulus() || y.dim() != s.dimension())
    throw std::invalid_argument("endpoint_count: point incompatible with set");
  long count = 0;
  std::vector<std::int32_t> vc(y.coords.size());
  for (const auto& w : s.points()) {
    for (int i = 0; i < y.dim(); ++i) {
      std::int64_t v = (2 * std::int64_t{w.coords[i]} - y.coords[i]) % s.modulus();
      if (v < 0) v += s.modulus();
      vc[i] = static_cast<std::int32_t>(v);
    }
    GridPoint v(s.modulus(), vc);
    if (!(v == y) && s.contains(v)) ++count;
  }
  return count;
}

}  // namespace progfree
