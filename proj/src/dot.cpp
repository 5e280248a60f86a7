#include "zonospline/dot.hpp"

#include <sstream>

namespace zonospline {

std::string adjacency_to_dot(const ZonotopalTiling& tiling,
                             const AdjacencyGraph& graph,
                             const std::optional<Point>& orient_at) {
  std::ostringstream os;
  bool directed = orient_at.has_value();
  os << (directed ? "digraph tiling {\n" : "graph tiling {\n");
  os << "  node [shape=box];\n";
  for (size_t i = 0; i < tiling.tiles.size(); ++i)
    os << "  t" << i << " [label=\"" << tile_label(tiling.tiles[i]) << "\"];\n";
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    int a = edge.t0, b = edge.t1;
    if (directed && edge_direction(tiling, edge, *orient_at) == EdgeDir::Backward)
      std::swap(a, b);
    os << "  t" << a << (directed ? " -> t" : " -- t") << b << " [label=\""
       << index_set_label(edge.facet.C) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string eval_graph_to_dot(const EvalGraph& graph) {
  std::ostringstream os;
  os << "digraph evalgraph {\n";
  os << "  node [shape=box];\n";
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& n = graph.nodes[i];
    os << "  n" << i << " [label=\"" << index_set_label(n.shift) << "|"
       << index_set_label(n.basis) << "\""
       << (n.is_basis ? ", style=bold" : "") << "];\n";
  }
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    for (size_t pos = 0; pos < graph.nodes[i].res.size(); ++pos) {
      const auto& r = graph.nodes[i].res[pos];
      if (r.rule == EvalGraph::Rule::Zero) continue;
      const char* label =
          r.rule == EvalGraph::Rule::Copy ? "copy" : "insert";
      os << "  n" << r.target << " -> n" << i << " [label=\"" << label << ":"
         << graph.nodes[i].basis[pos] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace zonospline
