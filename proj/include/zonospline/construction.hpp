#ifndef ZONOSPLINE_CONSTRUCTION_HPP
#define ZONOSPLINE_CONSTRUCTION_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "zonospline/tiling.hpp"

namespace zonospline {

struct NonGenericHeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Memo for the exact predicates of one (config, height) pair. The lifted sign
// of a point against a basis does not depend on which active subset is being
// triangulated, so construction shares it across all link regions.
class PredicateCache {
 public:
  PredicateCache(const PointConfig& config, const HeightFunction& h)
      : config_(config), height_(h) {}

  // nullptr when the subset is affinely dependent
  const OrderedBasis* basis(const std::vector<int>& B);
  // throws NonGenericHeight on a zero sign (impossible for generic h)
  int lifted_sign(const std::vector<int>& B, int i);

  const PointConfig& config() const { return config_; }
  const HeightFunction& height() const { return height_; }

 private:
  const PointConfig& config_;
  const HeightFunction& height_;
  std::map<std::vector<int>, std::optional<OrderedBasis>> bases_;
  std::map<std::pair<std::vector<int>, int>, int> signs_;
};

// All (d+1)-subsets B of `active` with det+(B) > 0 whose lifted hyperplane
// has every other active point strictly above it. Returns the simplices of
// the weighted Delaunay triangulation of ch({a_i : i in active}), sorted.
// Returns an empty list when the active points do not span R^d.
std::vector<std::vector<int>> weighted_delaunay(const PointConfig& config,
                                                const std::vector<int>& active,
                                                const HeightFunction& h);
std::vector<std::vector<int>> weighted_delaunay(PredicateCache& cache,
                                                const std::vector<int>& active);

// For every affine basis B, the tile (I, B) with I = {i : lifted sign +1}.
// This is the regular tiling P(h), built by exhaustive enumeration; it serves
// as the oracle for the incremental construction.
ZonotopalTiling brute_force_regular_tiling(const PointConfig& config,
                                           const HeightFunction& h);

struct LinkRegion {
  std::vector<int> Q;
  std::vector<std::vector<int>> simplices;  // bases of the tiles with shift Q
  std::vector<std::vector<int>> source;     // the Delaunay triangulation of ch_Q

  bool empty() const { return simplices.empty(); }
};

// Weighted Delaunay triangulation of ch({a_i : i not in Q}) filtered to the
// simplices whose lifted hyperplane keeps every q in Q strictly below: these
// are exactly the order-|Q| tiles with shift set Q.
LinkRegion link_region(const PointConfig& config, const HeightFunction& h,
                       const std::vector<int>& Q);
LinkRegion link_region(PredicateCache& cache, const std::vector<int>& Q);

// Iterative construction: I^(0) = {emptyset}; each frontier set emits the
// tiles of its link region; the next frontier is {I+{b}} over emitted tiles,
// pruned of sets with empty link regions. Builds orders 0..k_max.
ZonotopalTiling incremental_build(const PointConfig& config,
                                  const HeightFunction& h, int k_max);

// x in ch_k(A): membership in ch({a_i : i in S}) for every S of size n-k.
bool chk_membership(const PointConfig& config, const std::vector<int>& active,
                    int k, const Point& x);
bool chk_membership(const PointConfig& config, int k, const Point& x);

}  // namespace zonospline

#endif
