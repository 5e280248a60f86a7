#include "zonospline/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zonospline/detail/subsets.hpp"
#include "zonospline/hull.hpp"

namespace zonospline {

const OrderedBasis* PredicateCache::basis(const std::vector<int>& B) {
  auto it = bases_.find(B);
  if (it == bases_.end())
    it = bases_.emplace(B, det_plus(config_, B)).first;
  return it->second ? &*it->second : nullptr;
}

int PredicateCache::lifted_sign(const std::vector<int>& B, int i) {
  auto key = std::make_pair(B, i);
  auto it = signs_.find(key);
  if (it == signs_.end()) {
    const OrderedBasis* ob = basis(B);
    int s = lifted_det_sign(config_, height_, *ob, i);
    if (s == 0)
      throw NonGenericHeight(
          "zero lifted determinant for a spanning basis: the height function "
          "is not generic");
    it = signs_.emplace(std::move(key), s).first;
  }
  return it->second;
}

namespace {

Tile make_tile(const OrderedBasis& ob, std::vector<int> shift) {
  Tile t;
  t.basis = ob.sorted();
  t.swapped = ob.order != t.basis;
  t.det = ob.det;
  t.shift = std::move(shift);
  return t;
}

}  // namespace

std::vector<std::vector<int>> weighted_delaunay(PredicateCache& cache,
                                                const std::vector<int>& active) {
  const PointConfig& config = cache.config();
  std::vector<std::vector<int>> simplices;
  if (affine_rank(config, active) < config.dim) return simplices;
  detail::for_each_subset_of(active, config.dim + 1, [&](const std::vector<int>& B) {
    if (!cache.basis(B)) return;
    for (int i : active) {
      if (std::binary_search(B.begin(), B.end(), i)) continue;
      if (cache.lifted_sign(B, i) != -1) return;
    }
    simplices.push_back(B);
  });
  return simplices;
}

std::vector<std::vector<int>> weighted_delaunay(const PointConfig& config,
                                                const std::vector<int>& active,
                                                const HeightFunction& h) {
  PredicateCache cache(config, h);
  return weighted_delaunay(cache, active);
}

ZonotopalTiling brute_force_regular_tiling(const PointConfig& config,
                                           const HeightFunction& h) {
  ZonotopalTiling out;
  out.config = config;
  out.height = h;
  out.active.resize(static_cast<size_t>(config.size()));
  std::iota(out.active.begin(), out.active.end(), 0);
  PredicateCache cache(config, h);
  detail::for_each_subset_of(out.active, config.dim + 1, [&](const std::vector<int>& B) {
    const OrderedBasis* ob = cache.basis(B);
    if (!ob) return;
    std::vector<int> shift;
    for (int i : out.active) {
      if (std::binary_search(B.begin(), B.end(), i)) continue;
      if (cache.lifted_sign(B, i) > 0) shift.push_back(i);
    }
    out.tiles.push_back(make_tile(*ob, std::move(shift)));
  });
  out.sort_canonical();
  out.max_order = out.full_order();
  return out;
}

LinkRegion link_region(PredicateCache& cache, const std::vector<int>& Q) {
  const PointConfig& config = cache.config();
  std::vector<int> q = Q;
  std::sort(q.begin(), q.end());
  std::vector<int> active;
  for (int i = 0; i < config.size(); ++i)
    if (!std::binary_search(q.begin(), q.end(), i)) active.push_back(i);

  LinkRegion region;
  region.Q = std::move(q);
  region.source = weighted_delaunay(cache, active);
  for (const auto& B : region.source) {
    bool keep = true;
    for (int i : region.Q)
      if (cache.lifted_sign(B, i) != +1) {
        keep = false;
        break;
      }
    if (keep) region.simplices.push_back(B);
  }
  return region;
}

LinkRegion link_region(const PointConfig& config, const HeightFunction& h,
                       const std::vector<int>& Q) {
  PredicateCache cache(config, h);
  return link_region(cache, Q);
}

ZonotopalTiling incremental_build(const PointConfig& config,
                                  const HeightFunction& h, int k_max) {
  const int full = config.size() - config.dim - 1;
  if (k_max < 0 || k_max > full)
    throw std::invalid_argument("k_max out of range [0, n-d-1]");

  ZonotopalTiling out;
  out.config = config;
  out.height = h;
  out.active.resize(static_cast<size_t>(config.size()));
  std::iota(out.active.begin(), out.active.end(), 0);
  out.max_order = k_max;

  PredicateCache cache(config, h);
  std::set<std::vector<int>> frontier{{}};
  for (int k = 0; k <= k_max && !frontier.empty(); ++k) {
    std::set<std::vector<int>> next;
    for (const auto& I : frontier) {
      LinkRegion region = link_region(cache, I);
      for (const auto& B : region.simplices) {
        out.tiles.push_back(make_tile(*cache.basis(B), I));
        for (int b : B) {
          std::vector<int> grown = I;
          grown.insert(std::lower_bound(grown.begin(), grown.end(), b), b);
          next.insert(std::move(grown));
        }
      }
    }
    // Pruning of candidates with empty link regions happens implicitly when
    // the next sweep finds no simplices for them.
    frontier = std::move(next);
  }
  out.sort_canonical();
  return out;
}

namespace {

// Sound directional rejection: if x.u exceeds the (k+1)-th largest of the
// active dot products, dropping the k extremal points yields a subset whose
// hull misses x, so x is outside ch_k. Exact, and cheap enough to screen the
// O(C(n,k)) subset sweep.
bool chk_directional_reject(const PointConfig& config,
                            const std::vector<int>& active, int k,
                            const Point& x) {
  const int d = config.dim;
  std::vector<std::vector<int>> dirs;
  for (int j = 0; j < d; ++j) {
    std::vector<int> u(static_cast<size_t>(d), 0);
    u[static_cast<size_t>(j)] = 1;
    dirs.push_back(u);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int s : {1, -1}) {
        std::vector<int> u(static_cast<size_t>(d), 0);
        u[static_cast<size_t>(i)] = 1;
        u[static_cast<size_t>(j)] = s;
        dirs.push_back(u);
      }
  for (const auto& u : dirs) {
    std::vector<Rational> dots;
    dots.reserve(active.size());
    for (int i : active) {
      Rational v(0);
      for (int j = 0; j < d; ++j)
        v += config.point(i)[static_cast<size_t>(j)] * u[static_cast<size_t>(j)];
      dots.push_back(std::move(v));
    }
    Rational xu(0);
    for (int j = 0; j < d; ++j)
      xu += x[static_cast<size_t>(j)] * u[static_cast<size_t>(j)];
    std::sort(dots.begin(), dots.end());
    if (xu > dots[dots.size() - 1 - static_cast<size_t>(k)]) return true;
    if (xu < dots[static_cast<size_t>(k)]) return true;
  }
  return false;
}

}  // namespace

bool chk_membership(const PointConfig& config, const std::vector<int>& active,
                    int k, const Point& x) {
  const int n = static_cast<int>(active.size());
  if (k < 0 || k > n - config.dim - 1)
    throw std::invalid_argument("chk_membership: k out of range");
  if (chk_directional_reject(config, active, k, x)) return false;
  HullOracle oracle(config, x);
  bool inside = true;
  detail::for_each_subset_of(active, n - k, [&](const std::vector<int>& S) {
    if (!oracle.in_hull(S)) inside = false;
    return inside;
  });
  return inside;
}

bool chk_membership(const PointConfig& config, int k, const Point& x) {
  std::vector<int> all(static_cast<size_t>(config.size()));
  std::iota(all.begin(), all.end(), 0);
  return chk_membership(config, all, k, x);
}

}  // namespace zonospline
