#ifndef ZONOSPLINE_QUERY_HPP
#define ZONOSPLINE_QUERY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "zonospline/tiling.hpp"

namespace zonospline {

struct NonGenericPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Direction of an adjacency edge induced by a query point x: the facet
// normal is oriented to make <N_C,(x,1)> positive and the edge follows it.
// Computed from exact signs only. Throws NonGenericPoint when x lies on the
// facet hyperplane.
enum class EdgeDir { Forward, Backward };  // t0 -> t1 / t1 -> t0
EdgeDir edge_direction(const ZonotopalTiling& tiling,
                       const AdjacencyGraph::Edge& edge, const Point& x);

struct OrientedGraph {
  const AdjacencyGraph* base = nullptr;
  std::vector<EdgeDir> dir;        // per edge id
  std::vector<int> topo_order;     // tile ids, sources first

  int edge_source(int e) const {
    return dir[static_cast<size_t>(e)] == EdgeDir::Forward
               ? base->edges[static_cast<size_t>(e)].t0
               : base->edges[static_cast<size_t>(e)].t1;
  }
  int edge_target(int e) const {
    return dir[static_cast<size_t>(e)] == EdgeDir::Forward
               ? base->edges[static_cast<size_t>(e)].t1
               : base->edges[static_cast<size_t>(e)].t0;
  }
};

// Orients every edge by x and topologically sorts the result. A cycle would
// falsify regularity or genericity and raises InvariantViolation.
OrientedGraph orient_graph(const ZonotopalTiling& tiling,
                           const AdjacencyGraph& graph, const Point& x);

struct LocateDiagnostics {
  bool boundary_tie = false;  // x lay on a simplex boundary; lowest id won
};

// The unique order-0 tile whose simplex contains x, empty outside ch(A).
// Uses a linear scan for small tilings and a bounding-volume tree above
// `bvh_threshold` simplices.
std::optional<int> locate_zero(const ZonotopalTiling& tiling, const Point& x,
                               LocateDiagnostics* diag = nullptr,
                               int bvh_threshold = 1000);

// All tiles of order <= k_max supported on x (x in ch of their knots), found
// by forward traversal of the oriented adjacency graph from the order-0 tile,
// expanding only supported tiles. Matches the brute-force support scan.
std::vector<int> supported_tiles(const ZonotopalTiling& tiling,
                                 const AdjacencyGraph& graph, const Point& x,
                                 int k_max);

// Brute-force oracle for the same query.
std::vector<int> supported_tiles_scan(const ZonotopalTiling& tiling,
                                      const Point& x, int k_max);

}  // namespace zonospline

#endif
