#ifndef ZONOSPLINE_SPLINE_HPP
#define ZONOSPLINE_SPLINE_HPP

#include <map>
#include <utility>
#include <vector>

#include "zonospline/point_config.hpp"
#include "zonospline/tiling.hpp"

namespace zonospline {

// Collects genericity incidents during an evaluation. Values are still
// returned (directional-limit convention); callers who care can inspect this.
struct EvalDiagnostics {
  int non_generic_hits = 0;
};

// A simplex spline M(. | (a_i)_{i in X}) of degree |X|-d-1 over the knots
// indexed by X. X is an index set; repeated points enter through repeated
// indices in the configuration.
struct SimplexSpline {
  const PointConfig* config = nullptr;
  std::vector<int> knots;  // sorted indices, |X| = k+d+1

  int degree() const;
};

struct SplineEvalOptions {
  // Force the top-level recurrence basis (must be an affinely independent
  // (d+1)-subset of the knots). Deeper levels pick the largest determinant.
  const std::vector<int>* basis_hint = nullptr;
  EvalDiagnostics* diag = nullptr;
};

// Micchelli recurrence. Degree 0 is d!/det+(X) times the hull indicator;
// on knot hypersurfaces the value is the exact directional limit from
// x + (eps, eps^2, ..., eps^d), eps -> 0+, which agrees with the closed-hull
// convention almost everywhere and keeps partitions of unity exact on the
// surfaces themselves. Sub-spline values are memoized per call.
double eval_spline(const PointConfig& config, const std::vector<int>& knots,
                   const Point& x, const SplineEvalOptions& opts = {});

double eval_spline(const SimplexSpline& spline, const Point& x,
                   const SplineEvalOptions& opts = {});

// Both sides of the knot insertion identity
//   det+(B) M(x | X\{c}) = sum_b det^s(B; b->c) M(x | X\{b}).
// The caller asserts lhs ~ rhs.
std::pair<double, double> knot_insertion_lhs_rhs(const PointConfig& config,
                                                 const std::vector<int>& X,
                                                 const std::vector<int>& B,
                                                 int c, const Point& x);

// Exact indicator of the closed simplex under the directional-limit
// convention: true iff x + (eps,...,eps^d) lies in ch((a_b)_B) for all small
// eps > 0. Never ambiguous; reports a first-coefficient tie through `diag`.
bool simplex_indicator_limit(const PointConfig& config, const OrderedBasis& B,
                             const Point& x, EvalDiagnostics* diag = nullptr);

}  // namespace zonospline

#endif
