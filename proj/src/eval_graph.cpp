#include "zonospline/eval_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "zonospline/construction.hpp"
#include "zonospline/hull.hpp"
#include "zonospline/query.hpp"

namespace zonospline {

std::vector<int> EvalGraph::Node::knots() const {
  std::vector<int> x = shift;
  x.insert(x.end(), basis.begin(), basis.end());
  std::sort(x.begin(), x.end());
  return x;
}

OrderedBasis EvalGraph::Node::to_ordered() const {
  std::vector<int> b = basis;
  if (swapped && b.size() >= 2) std::swap(b[0], b[1]);
  return OrderedBasis{std::move(b), det};
}

int EvalGraph::find(const std::vector<int>& shift,
                    const std::vector<int>& basis) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].shift == shift && nodes[i].basis == basis)
      return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<int> without(const std::vector<int>& sorted, int v) {
  std::vector<int> out;
  out.reserve(sorted.size() - 1);
  for (int i : sorted)
    if (i != v) out.push_back(i);
  return out;
}

std::vector<int> with(std::vector<int> sorted, int v) {
  sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), v), v);
  return sorted;
}

}  // namespace

EvalGraph build_eval_graph(const ZonotopalTiling& tiling, int k) {
  if (k > tiling.max_order)
    throw std::invalid_argument("tiling was not built up to order k");
  const PointConfig& config = tiling.config;
  PredicateCache cache(config, tiling.height);

  EvalGraph graph;
  graph.degree = k;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  std::deque<int> worklist;

  auto add_node = [&](const std::vector<int>& shift,
                      const std::vector<int>& basis, bool is_basis) {
    auto key = std::make_pair(shift, basis);
    auto it = index.find(key);
    if (it != index.end()) {
      if (is_basis) graph.nodes[static_cast<size_t>(it->second)].is_basis = true;
      return it->second;
    }
    const OrderedBasis* ob = cache.basis(basis);
    EvalGraph::Node node;
    node.shift = shift;
    node.basis = basis;
    node.swapped = ob->order != basis;
    node.det = ob->det;
    node.is_basis = is_basis;
    int id = static_cast<int>(graph.nodes.size());
    graph.nodes.push_back(std::move(node));
    index.emplace(std::move(key), id);
    worklist.push_back(id);
    return id;
  };

  for (int order = 0; order <= k; ++order)
    for (const Tile* t : tiling.tiles_of_order(order))
      graph.basis_nodes.push_back(add_node(t->shift, t->basis, true));

  while (!worklist.empty()) {
    int id = worklist.front();
    worklist.pop_front();
    // resolutions computed on a copy of the index lists: nodes vector may
    // reallocate while neighbours are added
    std::vector<int> shift = graph.nodes[static_cast<size_t>(id)].shift;
    std::vector<int> basis = graph.nodes[static_cast<size_t>(id)].basis;
    std::vector<int> X = graph.nodes[static_cast<size_t>(id)].knots();
    std::vector<EvalGraph::Resolution> res(basis.size());
    for (size_t pos = 0; pos < basis.size(); ++pos) {
      int b = basis[pos];
      std::vector<int> C = without(basis, b);
      std::optional<std::pair<std::vector<int>, std::vector<int>>> bottom, top;
      for (int gamma : shift) {
        std::vector<int> cand = with(C, gamma);
        const OrderedBasis* ob = cache.basis(cand);
        if (!ob) continue;
        // shift of this basis inside the reduced configuration X
        std::vector<int> cand_shift;
        for (int i : X) {
          if (std::binary_search(cand.begin(), cand.end(), i)) continue;
          if (cache.lifted_sign(cand, i) > 0) cand_shift.push_back(i);
        }
        std::vector<int> lower = without(shift, gamma);
        if (cand_shift == lower)
          bottom = {std::move(cand_shift), std::move(cand)};
        else if (cand_shift == with(lower, b))
          top = {std::move(cand_shift), std::move(cand)};
      }
      EvalGraph::Resolution& r = res[pos];
      if (bottom) {
        r.rule = EvalGraph::Rule::Copy;
        r.target = add_node(bottom->first, bottom->second, false);
      } else if (top) {
        r.rule = EvalGraph::Rule::Insert;
        r.target = add_node(top->first, top->second, false);
        const OrderedBasis* obU = cache.basis(top->second);
        r.coeffs.reserve(top->second.size());
        for (int beta : top->second)
          r.coeffs.push_back(to_double(det_sub(config, *obU, beta, b) / obU->det));
        r.support = without(X, b);
      } else {
        r.rule = EvalGraph::Rule::Zero;
      }
    }
    graph.nodes[static_cast<size_t>(id)].res = std::move(res);
  }
  return graph;
}

namespace {

struct GraphRun {
  const EvalGraph& graph;
  const PointConfig& config;
  const Point& x;
  EvalDiagnostics* diag;
  HullOracle oracle;
  std::vector<char> has_value, has_sub, in_progress;
  std::vector<double> values;
  std::vector<std::vector<double>> subs;

  GraphRun(const EvalGraph& g, const PointConfig& c, const Point& px,
           EvalDiagnostics* d)
      : graph(g), config(c), x(px), diag(d), oracle(c, px) {
    has_value.assign(g.nodes.size(), 0);
    values.assign(g.nodes.size(), 0.0);
    subs.resize(g.nodes.size());
    has_sub.assign(g.nodes.size() * (static_cast<size_t>(config.dim) + 1), 0);
    in_progress.assign(has_sub.size(), 0);
    for (size_t i = 0; i < g.nodes.size(); ++i)
      subs[i].assign(g.nodes[i].basis.size(), 0.0);
  }

  size_t flat(int node, size_t pos) const {
    return static_cast<size_t>(node) * (static_cast<size_t>(config.dim) + 1) + pos;
  }

  double value(int id) {
    if (has_value[static_cast<size_t>(id)]) return values[static_cast<size_t>(id)];
    const auto& node = graph.nodes[static_cast<size_t>(id)];
    const int d = config.dim;
    const int k = node.order();
    double v = 0.0;
    OrderedBasis ob = node.to_ordered();
    if (k == 0) {
      if (simplex_indicator_limit(config, ob, x, diag)) {
        double fact = 1.0;
        for (int i = 2; i <= d; ++i) fact *= i;
        v = fact / to_double(node.det);
      }
    } else {
      for (size_t pos = 0; pos < node.basis.size(); ++pos) {
        double coeff =
            to_double(det_sub(config, ob, node.basis[pos], x) / node.det);
        if (coeff == 0.0) continue;
        double m = sub(id, pos);
        if (m != 0.0) v += coeff * m;
      }
      v *= double(k + d) / double(k);
    }
    has_value[static_cast<size_t>(id)] = 1;
    values[static_cast<size_t>(id)] = v;
    return v;
  }

  // M(x | X\{b}) for direction pos of node id
  double sub(int id, size_t pos) {
    size_t key = flat(id, pos);
    if (has_sub[key]) return subs[static_cast<size_t>(id)][pos];
    const auto& r = graph.nodes[static_cast<size_t>(id)].res[pos];
    double v = 0.0;
    switch (r.rule) {
      case EvalGraph::Rule::Zero:
        break;
      case EvalGraph::Rule::Copy:
        v = value(r.target);
        break;
      case EvalGraph::Rule::Insert: {
        // outside the closed support the sub-spline vanishes; this test also
        // resolves mutual insertion pairs per query point
        if (!oracle.in_hull(r.support)) break;
        if (in_progress[key])
          throw NonGenericPoint(
              "cyclic insertion dependency: the query point lies on a knot "
              "hyperplane of the evaluation graph");
        in_progress[key] = 1;
        for (size_t j = 0; j < r.coeffs.size(); ++j) {
          if (r.coeffs[j] == 0.0) continue;
          double m = sub(r.target, j);
          if (m != 0.0) v += r.coeffs[j] * m;
        }
        in_progress[key] = 0;
        break;
      }
    }
    has_sub[key] = 1;
    subs[static_cast<size_t>(id)][pos] = v;
    return v;
  }
};

}  // namespace

std::vector<double> eval_graph_run(const EvalGraph& graph,
                                   const PointConfig& config, const Point& x,
                                   EvalDiagnostics* diag) {
  GraphRun run(graph, config, x, diag);
  std::vector<double> out(graph.nodes.size(), 0.0);
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    out[i] = run.value(static_cast<int>(i));
  return out;
}

}  // namespace zonospline
