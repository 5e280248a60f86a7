#ifndef ZONOSPLINE_DOT_HPP
#define ZONOSPLINE_DOT_HPP

#include <optional>
#include <string>

#include "zonospline/eval_graph.hpp"
#include "zonospline/query.hpp"
#include "zonospline/tiling.hpp"

namespace zonospline {

// Adjacency graph as DOT: undirected, or directed by a query point.
std::string adjacency_to_dot(const ZonotopalTiling& tiling,
                             const AdjacencyGraph& graph,
                             const std::optional<Point>& orient_at);

std::string eval_graph_to_dot(const EvalGraph& graph);

}  // namespace zonospline

#endif
