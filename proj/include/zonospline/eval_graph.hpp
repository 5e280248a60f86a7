#ifndef ZONOSPLINE_EVAL_GRAPH_HPP
#define ZONOSPLINE_EVAL_GRAPH_HPP

#include <vector>

#include "zonospline/spline.hpp"
#include "zonospline/tiling.hpp"

namespace zonospline {

// A DAG of basis and auxiliary simplex splines that suffices to evaluate all
// basis splines of order <= k by recurrence and knot insertion.
//
// Each node (I', B') is the maximal-order tile of the regular tiling induced
// on its own knot set X' = I'+B'. For every direction b in B' the node needs
// the sub-spline M(x | X'\{b}); the induced tiling provides it either as the
// value of the lower-order neighbour across the facet (I', B'\{b}) (a copy),
// or through the knot insertion identity from the same-order neighbour across
// (I'+{b}, B'\{b}) (an insertion), or it is identically zero when X'\{b} is
// degenerate. Insertion links between two maximal tiles can be mutual; which
// of the two directions is actually needed depends on the query point, so
// insertion edges carry the knots of the sub-spline and the runtime applies
// an exact support test before following them (the value is zero outside).
struct EvalGraph {
  enum class Rule { Zero, Copy, Insert };

  struct Resolution {
    Rule rule = Rule::Zero;
    int target = -1;             // node id (Copy, Insert)
    std::vector<double> coeffs;  // Insert: det^s(B_t; beta->b)/det+(B_t) per
                                 // position in the target's sorted basis
    std::vector<int> support;    // knots of the sub-spline, for the pre-test
  };

  struct Node {
    std::vector<int> shift, basis;  // sorted; disjoint
    bool swapped = false;
    Rational det;                    // det+(basis)
    std::vector<Resolution> res;     // one per position in `basis`
    bool is_basis = false;           // tile of the source tiling

    int order() const { return static_cast<int>(shift.size()); }
    std::vector<int> knots() const;
    OrderedBasis to_ordered() const;
  };

  std::vector<Node> nodes;
  int degree = 0;            // k
  std::vector<int> basis_nodes;  // ids of the source tiling's tiles, order <= k

  int find(const std::vector<int>& shift, const std::vector<int>& basis) const;
};

// Discovers all auxiliary splines needed for the basis splines of order <= k.
// Induced tilings are computed by lifted-sign tests over each reduced knot
// set; auxiliary nodes are stored once, globally.
EvalGraph build_eval_graph(const ZonotopalTiling& tiling, int k);

// Evaluates every node at x. Degree-0 nodes use the indicator rule, higher
// nodes the recurrence on their resolved sub-splines. Throws NonGenericPoint
// if a mutual insertion pair is hit with x on its facet hyperplane.
std::vector<double> eval_graph_run(const EvalGraph& graph,
                                   const PointConfig& config, const Point& x,
                                   EvalDiagnostics* diag = nullptr);

}  // namespace zonospline

#endif
