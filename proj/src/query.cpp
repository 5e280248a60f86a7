#include "zonospline/query.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "zonospline/determinant.hpp"
#include "zonospline/hull.hpp"

namespace zonospline {

namespace {

std::vector<int> set_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// det((a_c,1)_{c in C}, (y,1)) with a fixed row order (C sorted).
Rational facet_plane_det(const PointConfig& config, const std::vector<int>& C,
                         const Point& y) {
  std::vector<std::vector<Rational>> m;
  m.reserve(C.size() + 1);
  for (int c : C) {
    auto row = config.point(c);
    row.push_back(Rational(1));
    m.push_back(std::move(row));
  }
  auto row = y;
  row.push_back(Rational(1));
  m.push_back(std::move(row));
  return det_exact(std::move(m));
}

int lifted_pair_sign(const PointConfig& config, const HeightFunction& h,
                     const std::vector<int>& C, int i, int j) {
  std::vector<std::vector<Rational>> m;
  m.reserve(C.size() + 2);
  auto lifted = [&](int p) {
    auto row = config.point(p);
    row.push_back(h.at(p));
    row.push_back(Rational(1));
    return row;
  };
  for (int c : C) m.push_back(lifted(c));
  m.push_back(lifted(i));
  m.push_back(lifted(j));
  return sign_of(det_exact(std::move(m)));
}

}  // namespace

EdgeDir edge_direction(const ZonotopalTiling& tiling,
                       const AdjacencyGraph::Edge& edge, const Point& x) {
  const Tile& t = tiling.tiles[static_cast<size_t>(edge.t0)];
  const Tile& u = tiling.tiles[static_cast<size_t>(edge.t1)];
  const auto& C = edge.facet.C;
  int b = set_diff(t.basis, C)[0];
  int bp = set_diff(u.basis, C)[0];

  int sx = sign_of(facet_plane_det(tiling.config, C, x));
  if (sx == 0)
    throw NonGenericPoint("query point lies on the hyperplane of facet J=" +
                          index_set_label(edge.facet.J) + " C=" +
                          index_set_label(edge.facet.C));
  int sb = sign_of(facet_plane_det(tiling.config, C, tiling.config.point(b)));
  int sbp = sign_of(facet_plane_det(tiling.config, C, tiling.config.point(bp)));
  int sbb = lifted_pair_sign(tiling.config, tiling.height, C, b, bp);
  // <N_C, z - z'> has sign sbb*sb*sbp with N_C normalized against (x,1);
  // the edge t0 -> t1 needs sign<N_C,(x,1)> == sign<N_C, z' - z>.
  return sx == -(sbb * sb * sbp) ? EdgeDir::Forward : EdgeDir::Backward;
}

OrientedGraph orient_graph(const ZonotopalTiling& tiling,
                           const AdjacencyGraph& graph, const Point& x) {
  OrientedGraph out;
  out.base = &graph;
  out.dir.reserve(graph.edges.size());
  for (const auto& e : graph.edges)
    out.dir.push_back(edge_direction(tiling, e, x));

  // Kahn topological sort
  std::vector<int> indeg(graph.incident.size(), 0);
  for (size_t e = 0; e < graph.edges.size(); ++e)
    ++indeg[static_cast<size_t>(out.edge_target(static_cast<int>(e)))];
  std::deque<int> ready;
  for (size_t t = 0; t < indeg.size(); ++t)
    if (indeg[t] == 0) ready.push_back(static_cast<int>(t));
  while (!ready.empty()) {
    int t = ready.front();
    ready.pop_front();
    out.topo_order.push_back(t);
    for (int e : graph.incident[static_cast<size_t>(t)]) {
      if (out.edge_source(e) != t) continue;
      int v = out.edge_target(e);
      if (--indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
    }
  }
  if (out.topo_order.size() != graph.incident.size())
    throw InvariantViolation(
        "oriented adjacency graph contains a cycle: the tiling is not "
        "regular or the query point is not generic");
  return out;
}

namespace {

// Axis-aligned bounding volume tree over simplices with exact bounds.
struct Bvh {
  struct Node {
    std::vector<Point> lo, hi;  // box as two corner points (size 1 each)
    Point box_lo, box_hi;
    int left = -1, right = -1;
    std::vector<int> items;  // leaf payload: tile positions
  };
  std::vector<Node> nodes;
  int root = -1;

  static Point min_p(const Point& a, const Point& b) {
    Point r = a;
    for (size_t i = 0; i < r.size(); ++i)
      if (b[i] < r[i]) r[i] = b[i];
    return r;
  }
  static Point max_p(const Point& a, const Point& b) {
    Point r = a;
    for (size_t i = 0; i < r.size(); ++i)
      if (b[i] > r[i]) r[i] = b[i];
    return r;
  }

  int build(std::vector<int> items, const std::vector<Point>& los,
            const std::vector<Point>& his, int depth) {
    Node node;
    node.box_lo = los[static_cast<size_t>(items[0])];
    node.box_hi = his[static_cast<size_t>(items[0])];
    for (int i : items) {
      node.box_lo = min_p(node.box_lo, los[static_cast<size_t>(i)]);
      node.box_hi = max_p(node.box_hi, his[static_cast<size_t>(i)]);
    }
    if (items.size() <= 4) {
      node.items = std::move(items);
      nodes.push_back(std::move(node));
      return static_cast<int>(nodes.size() - 1);
    }
    size_t axis = static_cast<size_t>(depth) % node.box_lo.size();
    std::sort(items.begin(), items.end(), [&](int a, int b) {
      return los[static_cast<size_t>(a)][axis] < los[static_cast<size_t>(b)][axis];
    });
    std::vector<int> left(items.begin(), items.begin() + items.size() / 2);
    std::vector<int> right(items.begin() + items.size() / 2, items.end());
    int l = build(std::move(left), los, his, depth + 1);
    int r = build(std::move(right), los, his, depth + 1);
    node.left = l;
    node.right = r;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size() - 1);
  }

  void query(int id, const Point& x, std::vector<int>& out) const {
    const Node& node = nodes[static_cast<size_t>(id)];
    for (size_t j = 0; j < x.size(); ++j)
      if (x[j] < node.box_lo[j] || x[j] > node.box_hi[j]) return;
    if (node.left < 0) {
      out.insert(out.end(), node.items.begin(), node.items.end());
      return;
    }
    query(node.left, x, out);
    query(node.right, x, out);
  }
};

bool tile_simplex_contains(const PointConfig& config, const Tile& t,
                           const Point& x) {
  OrderedBasis ob = t.to_ordered();
  for (int b : ob.order)
    if (det_sub(config, ob, b, x) < 0) return false;
  return true;
}

}  // namespace

std::optional<int> locate_zero(const ZonotopalTiling& tiling, const Point& x,
                               LocateDiagnostics* diag, int bvh_threshold) {
  std::vector<int> order0;
  for (size_t i = 0; i < tiling.tiles.size(); ++i)
    if (tiling.tiles[i].order() == 0) order0.push_back(static_cast<int>(i));

  std::vector<int> candidates;
  if (static_cast<int>(order0.size()) > bvh_threshold) {
    std::vector<Point> los, his;
    los.reserve(order0.size());
    his.reserve(order0.size());
    for (int id : order0) {
      const Tile& t = tiling.tiles[static_cast<size_t>(id)];
      Point lo = tiling.config.point(t.basis[0]), hi = lo;
      for (int b : t.basis) {
        lo = Bvh::min_p(lo, tiling.config.point(b));
        hi = Bvh::max_p(hi, tiling.config.point(b));
      }
      los.push_back(std::move(lo));
      his.push_back(std::move(hi));
    }
    Bvh bvh;
    std::vector<int> items(order0.size());
    for (size_t i = 0; i < order0.size(); ++i) items[i] = static_cast<int>(i);
    bvh.root = bvh.build(std::move(items), los, his, 0);
    std::vector<int> hits;
    bvh.query(bvh.root, x, hits);
    for (int h : hits) candidates.push_back(order0[static_cast<size_t>(h)]);
    std::sort(candidates.begin(), candidates.end());
  } else {
    candidates = order0;
  }

  std::vector<int> containing;
  for (int id : candidates)
    if (tile_simplex_contains(tiling.config, tiling.tiles[static_cast<size_t>(id)], x))
      containing.push_back(id);
  if (containing.empty()) return std::nullopt;
  if (containing.size() > 1 && diag) diag->boundary_tie = true;
  return *std::min_element(containing.begin(), containing.end());
}

std::vector<int> supported_tiles(const ZonotopalTiling& tiling,
                                 const AdjacencyGraph& graph, const Point& x,
                                 int k_max) {
  std::vector<int> out;
  auto root = locate_zero(tiling, x);
  if (!root) return out;

  HullOracle oracle(tiling.config, x);
  std::vector<char> visited(tiling.tiles.size(), 0);
  std::queue<int> frontier;
  visited[static_cast<size_t>(*root)] = 1;
  frontier.push(*root);
  while (!frontier.empty()) {
    int t = frontier.front();
    frontier.pop();
    out.push_back(t);
    for (int e : graph.incident[static_cast<size_t>(t)]) {
      const auto& edge = graph.edges[static_cast<size_t>(e)];
      if (edge_direction(tiling, edge, x) !=
          (edge.t0 == t ? EdgeDir::Forward : EdgeDir::Backward))
        continue;  // edge points into t
      int v = edge.t0 == t ? edge.t1 : edge.t0;
      if (visited[static_cast<size_t>(v)]) continue;
      visited[static_cast<size_t>(v)] = 1;
      const Tile& tv = tiling.tiles[static_cast<size_t>(v)];
      if (tv.order() > k_max) continue;
      // reachability guarantees candidates; support still needs checking
      if (!oracle.in_hull(tv.knots())) continue;
      frontier.push(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> supported_tiles_scan(const ZonotopalTiling& tiling,
                                      const Point& x, int k_max) {
  HullOracle oracle(tiling.config, x);
  std::vector<int> out;
  for (size_t i = 0; i < tiling.tiles.size(); ++i) {
    const Tile& t = tiling.tiles[i];
    if (t.order() > k_max) continue;
    if (oracle.in_hull(t.knots())) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace zonospline
