#include "zonospline/tiling.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zonospline/construction.hpp"
#include "zonospline/detail/subsets.hpp"
#include "zonospline/hull.hpp"

namespace zonospline {

std::vector<int> Tile::ordered_basis() const {
  std::vector<int> b = basis;
  if (swapped && b.size() >= 2) std::swap(b[0], b[1]);
  return b;
}

std::vector<int> Tile::knots() const {
  std::vector<int> x = shift;
  x.insert(x.end(), basis.begin(), basis.end());
  std::sort(x.begin(), x.end());
  return x;
}

bool tile_less(const Tile& a, const Tile& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.shift != b.shift) return a.shift < b.shift;
  return a.basis < b.basis;
}

std::string index_set_label(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

std::string tile_label(const Tile& t) {
  return index_set_label(t.shift) + "|" + index_set_label(t.basis);
}

std::vector<const Tile*> ZonotopalTiling::tiles_of_order(int k) const {
  std::vector<const Tile*> out;
  for (const Tile& t : tiles)
    if (t.order() == k) out.push_back(&t);
  return out;
}

int ZonotopalTiling::find_tile(const std::vector<int>& shift,
                               const std::vector<int>& basis) const {
  for (size_t i = 0; i < tiles.size(); ++i)
    if (tiles[i].shift == shift && tiles[i].basis == basis)
      return static_cast<int>(i);
  return -1;
}

void ZonotopalTiling::sort_canonical() {
  std::sort(tiles.begin(), tiles.end(), tile_less);
}

std::vector<Facet> facets_of(const Tile& tile) {
  std::vector<Facet> out;
  out.reserve(2 * tile.basis.size());
  for (int b : tile.basis) {
    std::vector<int> C;
    for (int v : tile.basis)
      if (v != b) C.push_back(v);
    out.push_back(Facet{tile.shift, C});
    std::vector<int> J = tile.shift;
    J.insert(std::lower_bound(J.begin(), J.end(), b), b);
    out.push_back(Facet{std::move(J), std::move(C)});
  }
  return out;
}

namespace {

// a \ b for sorted vectors
std::vector<int> diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> unite(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> intersect(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> with(std::vector<int> a, int v) {
  a.insert(std::lower_bound(a.begin(), a.end(), v), v);
  return a;
}

}  // namespace

std::optional<Facet> shared_facet(const Tile& t, const Tile& u) {
  if (t == u) return std::nullopt;
  std::vector<int> C = intersect(t.basis, u.basis);
  if (static_cast<int>(C.size()) != static_cast<int>(t.basis.size()) - 1)
    return std::nullopt;
  std::vector<int> bt = diff(t.basis, C), bu = diff(u.basis, C);
  int b = bt[0], bp = bu[0];
  const auto& I = t.shift;
  const auto& Ip = u.shift;
  bool match = I == Ip || I == with(Ip, bp) || Ip == with(I, b) ||
               with(I, b) == with(Ip, bp);
  if (!match) return std::nullopt;
  return Facet{unite(I, Ip), std::move(C)};
}

AdjacencyGraph build_adjacency(const ZonotopalTiling& tiling) {
  AdjacencyGraph g;
  g.incident.resize(tiling.tiles.size());
  std::map<Facet, std::vector<int>> owners;
  for (size_t i = 0; i < tiling.tiles.size(); ++i)
    for (Facet& f : facets_of(tiling.tiles[i]))
      owners[std::move(f)].push_back(static_cast<int>(i));
  for (auto& [facet, tiles] : owners) {
    if (tiles.size() == 1) continue;
    if (tiles.size() > 2)
      throw std::runtime_error("facet with more than two owners: corrupt tiling");
    int e = static_cast<int>(g.edges.size());
    g.edges.push_back({tiles[0], tiles[1], facet});
    g.incident[static_cast<size_t>(tiles[0])].push_back(e);
    g.incident[static_cast<size_t>(tiles[1])].push_back(e);
  }
  return g;
}

ZonotopalTiling induced_tiling(const ZonotopalTiling& tiling,
                               const std::vector<int>& Q) {
  if (!tiling.complete())
    throw std::invalid_argument("induced_tiling needs a complete tiling");
  std::vector<int> q = Q;
  std::sort(q.begin(), q.end());
  ZonotopalTiling out;
  out.config = tiling.config;
  out.height = tiling.height;
  out.active = diff(tiling.active, q);
  for (const Tile& t : tiling.tiles) {
    if (!intersect(t.basis, q).empty()) continue;
    Tile reduced = t;
    reduced.shift = diff(t.shift, q);
    out.tiles.push_back(std::move(reduced));
  }
  out.sort_canonical();
  out.max_order = out.full_order();
  return out;
}

FacetClass classify_facet(const ZonotopalTiling& tiling,
                          const AdjacencyGraph& graph, int tile_id,
                          const Facet& facet) {
  for (int e : graph.incident[static_cast<size_t>(tile_id)]) {
    const auto& edge = graph.edges[static_cast<size_t>(e)];
    if (!(edge.facet == facet)) continue;
    int other = edge.t0 == tile_id ? edge.t1 : edge.t0;
    const Tile& t = tiling.tiles[static_cast<size_t>(tile_id)];
    const Tile& u = tiling.tiles[static_cast<size_t>(other)];
    return FacetShared{other, t.order() == u.order()};
  }
  // Boundary: look for the orientation certificate of the facet hyperplane.
  const Tile& t = tiling.tiles[static_cast<size_t>(tile_id)];
  std::vector<int> bdiff = diff(t.basis, facet.C);
  if (bdiff.size() != 1)
    throw std::invalid_argument("facet does not belong to this tile");
  int b = bdiff[0];
  bool b_in_J =
      std::binary_search(facet.J.begin(), facet.J.end(), b);

  auto plane = det_plus(tiling.config, t.basis);
  if (!plane) throw std::runtime_error("degenerate tile basis");
  auto side = [&](int i) { return sign_of(det_sub(tiling.config, *plane, b, i)); };
  // det_sub with the row of b replaced orients aff(C) so that a_b is strictly
  // positive; the certificate orientation then must put a_b on the J side.
  std::vector<int> knots = t.knots();
  int s = b_in_J ? +1 : -1;
  bool ok = true;
  for (int i : t.shift)
    if (s * side(i) < 0) { ok = false; break; }
  if (ok)
    for (int i : tiling.active) {
      if (std::binary_search(knots.begin(), knots.end(), i)) continue;
      if (s * side(i) > 0) { ok = false; break; }
    }
  if (ok) return FacetBoundary{s};
  throw std::runtime_error("facet is neither shared nor boundary: corrupt tiling");
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  auto line = [&](const char* name, bool ok) {
    os << (ok ? "  [ok]   " : "  [FAIL] ") << name << "\n";
  };
  line("tile count (Shephard)", count_ok);
  line("each basis in exactly one tile", bases_unique);
  line("order-0 volume vs placing triangulation", volume_ok);
  line("facet ownership / boundary certificates", facets_ok);
  line("order-0 interiors disjoint (sampled)", disjoint_ok);
  line("cover counts C(k+d,d) (sampled)", cover_ok);
  line("lifted-sign shift audit", shifts_ok);
  for (const auto& f : failures) os << "  - " << f << "\n";
  return os.str();
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Point sample_box_point(const PointConfig& config,
                       const std::vector<int>& active, std::mt19937_64& rng) {
  const int d = config.dim;
  Point lo = config.point(active[0]), hi = lo;
  for (int i : active)
    for (int j = 0; j < d; ++j) {
      const Rational& v = config.point(i)[static_cast<size_t>(j)];
      if (v < lo[static_cast<size_t>(j)]) lo[static_cast<size_t>(j)] = v;
      if (v > hi[static_cast<size_t>(j)]) hi[static_cast<size_t>(j)] = v;
    }
  std::uniform_int_distribution<int> dist(0, 1 << 12);
  Point x(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    Rational u(dist(rng), 1 << 12);
    x[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)] +
        (hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)]) * u;
  }
  return x;
}

bool in_closed_simplex(const PointConfig& config, const Tile& t,
                       const Point& x) {
  OrderedBasis ob = t.to_ordered();
  for (int b : ob.order)
    if (det_sub(config, ob, b, x) < 0) return false;
  return true;
}

}  // namespace

VerifyReport verify_tiling(const ZonotopalTiling& tiling,
                           const VerifyOptions& opts) {
  VerifyReport rep;
  const PointConfig& config = tiling.config;
  const int d = config.dim;
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

  // (a) tile count against the brute-force count of affine bases.
  long long bases = 0, bases_in_range = 0;
  bool complete = tiling.complete();
  detail::for_each_subset_of(tiling.active, d + 1, [&](const std::vector<int>& B) {
    auto ob = det_plus(config, B);
    if (!ob) return;
    ++bases;
    if (!complete) {
      std::vector<int> knots = B;  // shift via lifted signs
      int order = 0;
      for (int i : tiling.active) {
        if (std::binary_search(B.begin(), B.end(), i)) continue;
        if (lifted_det_sign(config, tiling.height, *ob, i) > 0) ++order;
      }
      if (order <= tiling.max_order) ++bases_in_range;
    }
  });
  rep.expected_tiles = complete ? bases : bases_in_range;
  rep.actual_tiles = static_cast<long long>(tiling.tiles.size());
  rep.count_ok = rep.expected_tiles == rep.actual_tiles;
  if (!rep.count_ok)
    fail("tile count " + std::to_string(rep.actual_tiles) + " != expected " +
         std::to_string(rep.expected_tiles));

  // (a') each basis appears in exactly one tile
  std::set<std::vector<int>> seen;
  rep.bases_unique = true;
  for (const Tile& t : tiling.tiles)
    if (!seen.insert(t.basis).second) {
      rep.bases_unique = false;
      fail("basis repeated across tiles: " + tile_label(t));
      break;
    }

  // (b) order-0 simplex volumes sum to vol(ch(A)), exactly.
  Rational dfact(1);
  for (int i = 2; i <= d; ++i) dfact *= i;
  rep.volume_tiles = 0;
  for (const Tile* t : tiling.tiles_of_order(0)) rep.volume_tiles += t->det / dfact;
  rep.volume_oracle = hull_volume_placing(config, tiling.active);
  rep.volume_ok = rep.volume_tiles == rep.volume_oracle;
  if (!rep.volume_ok) fail("order-0 volume sum does not match hull volume");

  // (c) facet table: at most two owners, boundary certificates hold.
  rep.facets_ok = true;
  try {
    AdjacencyGraph graph = build_adjacency(tiling);
    for (size_t i = 0; i < tiling.tiles.size() && rep.facets_ok; ++i)
      for (const Facet& f : facets_of(tiling.tiles[i])) {
        try {
          classify_facet(tiling, graph, static_cast<int>(i), f);
        } catch (const std::exception& e) {
          // in a build truncated at max_order, a top facet's partner of
          // order max_order+1 is legitimately absent
          if (!complete &&
              static_cast<int>(f.J.size()) == tiling.max_order + 1)
            continue;
          rep.facets_ok = false;
          fail(std::string("facet classification: ") + e.what());
          break;
        }
      }
  } catch (const std::exception& e) {
    rep.facets_ok = false;
    fail(e.what());
  }

  // (audit) recompute every shift set from the lifted signs.
  rep.shifts_ok = true;
  if (opts.audit_shifts) {
    for (const Tile& t : tiling.tiles) {
      auto ob = t.to_ordered();
      std::vector<int> shift;
      std::vector<int> knots = t.knots();
      for (int i : tiling.active) {
        if (std::binary_search(t.basis.begin(), t.basis.end(), i)) continue;
        if (lifted_det_sign(config, tiling.height, ob, i) > 0) shift.push_back(i);
      }
      if (shift != t.shift) {
        rep.shifts_ok = false;
        fail("lifted-sign audit: tile " + tile_label(t) +
             " has a forged shift set");
        break;
      }
    }
  }

  // (d) sampled checks: order-0 partition and cover counts.
  std::mt19937_64 rng(opts.seed);
  rep.disjoint_ok = true;
  rep.cover_ok = true;
  auto order0 = tiling.tiles_of_order(0);
  int found = 0, attempts = 0;
  while (found < opts.cover_samples && attempts < opts.cover_samples * 400) {
    ++attempts;
    Point x = sample_box_point(config, tiling.active, rng);
    if (!is_generic_point(config, x)) continue;
    HullOracle oracle(config, x);
    if (!oracle.in_hull(tiling.active)) continue;
    ++found;
    int hits = 0;
    for (const Tile* t : order0)
      if (in_closed_simplex(config, *t, x)) ++hits;
    if (hits != 1) {
      rep.disjoint_ok = false;
      fail("sampled point covered by " + std::to_string(hits) +
           " order-0 simplices");
      break;
    }
  }
  if (found < opts.cover_samples && rep.disjoint_ok)
    fail("could not sample enough interior points for the partition check");

  for (int k = 1; k <= tiling.max_order && rep.cover_ok; ++k) {
    auto layer = tiling.tiles_of_order(k);
    long long want = binomial(k + d, d);
    int got = 0, tries = 0;
    while (got < opts.cover_samples && tries < opts.cover_samples * 400) {
      ++tries;
      if (tries == 2000 && got == 0) break;  // ch_k(A) looks empty
      Point x = sample_box_point(config, tiling.active, rng);
      if (!is_generic_point(config, x)) continue;
      if (!chk_membership(config, tiling.active, k, x)) continue;
      ++got;
      long long hits = 0;
      for (const Tile* t : layer)
        if (in_closed_simplex(config, *t, x)) ++hits;
      if (hits != want) {
        rep.cover_ok = false;
        fail("cover count at order " + std::to_string(k) + ": " +
             std::to_string(hits) + " != " + std::to_string(want));
        break;
      }
    }
    // An empty ch_k(A) makes the check vacuous at this order.
  }
  return rep;
}

}  // namespace zonospline
