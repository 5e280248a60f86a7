#ifndef ZONOSPLINE_HULL_HPP
#define ZONOSPLINE_HULL_HPP

#include <map>
#include <vector>

#include "zonospline/point_config.hpp"

namespace zonospline {

// Exact test x in ch({a_t : t in T}) for an affinely independent T of any
// size 1..d+1. Solves the barycentric system; inconsistent => outside the
// affine hull => false.
bool in_simplex(const PointConfig& config, const std::vector<int>& T,
                const Point& x);

// Membership in the convex hull of an arbitrary index subset, decided by
// Caratheodory: x is in ch(S) iff some affinely independent T subseteq S with
// |T| <= d+1 contains it. Simplex results are cached per query point, so
// repeated hull tests against overlapping subsets stay cheap.
class HullOracle {
 public:
  HullOracle(const PointConfig& config, Point x)
      : config_(config), x_(std::move(x)) {}

  bool in_hull(const std::vector<int>& S);  // S sorted or not; copied

  const Point& point() const { return x_; }

 private:
  bool simplex_contains(const std::vector<int>& T);

  const PointConfig& config_;
  Point x_;
  std::map<std::vector<int>, bool> cache_;
};

bool in_hull(const PointConfig& config, const std::vector<int>& S,
             const Point& x);

// Volume of ch({a_i : i in active}) by an incremental placing triangulation:
// seed with the first d+1 affinely independent points in index order, then
// cone each later point over the strictly visible boundary facets. Exact.
Rational hull_volume_placing(const PointConfig& config,
                             const std::vector<int>& active);

// True when x avoids every hyperplane spanned by d affinely independent
// configuration points. Such points are generic for facet orientations,
// simplex boundaries and knot hypersurfaces alike.
bool is_generic_point(const PointConfig& config, const Point& x);

}  // namespace zonospline

#endif
