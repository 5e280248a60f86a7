#ifndef ZONOSPLINE_TILING_HPP
#define ZONOSPLINE_TILING_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zonospline/determinant.hpp"
#include "zonospline/height.hpp"
#include "zonospline/point_config.hpp"

namespace zonospline {

// A tile (I, B): shift set I and affine basis B, disjoint, |B| = d+1,
// det+(B) > 0. Both index lists are kept sorted; `swapped` records whether the
// positive-determinant row order is the sorted order or the sorted order with
// its first two entries exchanged.
struct Tile {
  std::vector<int> shift;  // I, sorted
  std::vector<int> basis;  // B, sorted
  bool swapped = false;
  Rational det;  // det+(B) > 0

  int order() const { return static_cast<int>(shift.size()); }
  std::vector<int> ordered_basis() const;
  OrderedBasis to_ordered() const { return OrderedBasis{ordered_basis(), det}; }
  std::vector<int> knots() const;  // I ++ B, sorted

  friend bool operator==(const Tile& a, const Tile& b) {
    return a.shift == b.shift && a.basis == b.basis;
  }
};

// Canonical tile ordering: (order, I, B), all lexicographic.
bool tile_less(const Tile& a, const Tile& b);
std::string tile_label(const Tile& t);   // e.g. "{1}|{0,2}"
std::string index_set_label(const std::vector<int>& s);

// A facet Pi_{J,C}: |C| = d, and I <= J <= I+B for each owner tile.
struct Facet {
  std::vector<int> J;  // sorted
  std::vector<int> C;  // sorted

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.J == b.J && a.C == b.C;
  }
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.J != b.J ? a.J < b.J : a.C < b.C;
  }
};

struct ZonotopalTiling {
  PointConfig config;       // the full configuration
  HeightFunction height;    // the height the tiling was built from
  std::vector<int> active;  // indices tiled over (all of [n] for a full build)
  std::vector<Tile> tiles;  // canonically sorted
  int max_order = -1;       // orders 0..max_order are complete

  int dim() const { return config.dim; }
  int full_order() const {
    return static_cast<int>(active.size()) - config.dim - 1;
  }
  bool complete() const { return max_order == full_order(); }
  std::vector<const Tile*> tiles_of_order(int k) const;
  int find_tile(const std::vector<int>& shift,
                const std::vector<int>& basis) const;  // -1 if absent
  void sort_canonical();
};

// The 2(d+1) facets of a tile: for each b in B, (J=I, C=B\{b}) and
// (J=I+{b}, C=B\{b}).
std::vector<Facet> facets_of(const Tile& tile);

// The shared facet of two distinct tiles, if any: |B cap B'| = d and one of
// I=I', I=I'+{b'}, I'=I+{b}, I+{b}=I'+{b'}.
std::optional<Facet> shared_facet(const Tile& t, const Tile& u);

struct AdjacencyGraph {
  struct Edge {
    int t0, t1;  // tile ids in the tiling's canonical order
    Facet facet;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;  // tile id -> edge ids

  int tile_count() const { return static_cast<int>(incident.size()); }
};

AdjacencyGraph build_adjacency(const ZonotopalTiling& tiling);

// Restriction to a subconfiguration: drop Q from every shift set, keep only
// tiles whose basis avoids Q. The result tiles the reduced point set.
ZonotopalTiling induced_tiling(const ZonotopalTiling& tiling,
                               const std::vector<int>& Q);

struct FacetShared {
  int other;       // tile id of the second owner
  bool separated;  // a_b, a_b' separated by aff(C)  <=>  |I| = |I'|
};
struct FacetBoundary {
  int orientation;  // s in {+1,-1}: s*det((a_c,1)_C,(a_i,1)) >= 0 on I, <= 0 off
};
using FacetClass = std::variant<FacetShared, FacetBoundary>;

// Classifies a facet of tile `tile_id` as shared or boundary, with the
// orientation certificate in the boundary case. Throws on corrupted input
// (a facet that is neither).
FacetClass classify_facet(const ZonotopalTiling& tiling,
                          const AdjacencyGraph& graph, int tile_id,
                          const Facet& facet);

struct VerifyReport {
  bool count_ok = false;
  long long expected_tiles = 0, actual_tiles = 0;
  bool bases_unique = false;
  bool volume_ok = false;
  Rational volume_tiles, volume_oracle;
  bool facets_ok = false;
  bool disjoint_ok = false;   // sampled: order-0 interiors pairwise disjoint
  bool cover_ok = false;      // sampled: T^(k) covers ch_k(A) C(k+d,d) times
  bool shifts_ok = false;     // lifted-sign audit of every tile's shift set
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  std::string summary() const;
};

struct VerifyOptions {
  int cover_samples = 100;
  std::uint64_t seed = 2024;
  bool audit_shifts = true;  // requires the stored height function
};

// Structural verification: Shephard count, order-0 volume vs an independent
// placing triangulation, two-owner facets, sampled cover counts, and (for
// regular tilings) a per-tile lifted-sign audit.
VerifyReport verify_tiling(const ZonotopalTiling& tiling,
                           const VerifyOptions& opts = {});

}  // namespace zonospline

#endif
