#ifndef ZONOSPLINE_DETERMINANT_HPP
#define ZONOSPLINE_DETERMINANT_HPP

#include <optional>
#include <vector>

#include "zonospline/point_config.hpp"

namespace zonospline {

// Exact determinant of a square matrix, Bareiss fraction-free elimination.
Rational det_exact(std::vector<std::vector<Rational>> m);

// A (d+1)-subset of point indices together with the row order that makes
// det((a_b, 1)_b) positive, and that determinant's value.
struct OrderedBasis {
  std::vector<int> order;  // row order; a permutation of the subset
  Rational det;            // det((a_b,1)) in this order, always > 0

  std::vector<int> sorted() const;
  int row_of(int index) const;  // position of `index` in `order`, -1 if absent
};

// det+ : orders B so the lifted determinant is positive. Returns nullopt when
// the points are affinely dependent (determinant zero).
std::optional<OrderedBasis> det_plus(const PointConfig& config,
                                     const std::vector<int>& B);

// det^s with the row of index j replaced by the lift of an arbitrary point.
Rational det_sub(const PointConfig& config, const OrderedBasis& basis, int j,
                 const Point& x);

// det^s with the row of index j replaced by the lift of point k.
Rational det_sub(const PointConfig& config, const OrderedBasis& basis, int j,
                 int k);

struct HeightFunction;

// Exact sign of det((a_b, h_b, 1)_{b in basis order}, (a_i, h_i, 1)).
// Positive means the lift of point i lies below the hyperplane spanned by the
// lifted basis (it belongs to the shift set of the tile with this basis).
int lifted_det_sign(const PointConfig& config, const HeightFunction& h,
                    const OrderedBasis& basis, int i);

bool is_affine_basis(const PointConfig& config, const std::vector<int>& B);

}  // namespace zonospline

#endif
