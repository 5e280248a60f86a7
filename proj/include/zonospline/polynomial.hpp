#ifndef ZONOSPLINE_POLYNOMIAL_HPP
#define ZONOSPLINE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "zonospline/point_config.hpp"
#include "zonospline/tiling.hpp"

namespace zonospline {

// A d-variate polynomial as a sparse map exponent-vector -> coefficient.
struct Polynomial {
  int dim = 0;
  std::map<std::vector<int>, double> coeffs;

  int total_degree() const;
  double eval(const std::vector<double>& x) const;
  double eval(const Point& x) const;

  static Polynomial constant(int dim, double c);
  static Polynomial monomial(int dim, std::vector<int> exponents,
                             double c = 1.0);
  // Accepts sums of terms like "2*x0^2*x1 - x1 + 0.5". Variables are
  // x0..x{d-1}; in one dimension plain "x" is also accepted.
  static Polynomial parse(const std::string& text, int dim);
};

// The polar form (blossom) of a polynomial of degree <= arity: symmetric,
// affine in each of its `arity` point arguments, agreeing with the
// polynomial on the diagonal.
struct PolarForm {
  Polynomial poly;
  int arity = 0;

  double eval(const std::vector<std::vector<double>>& args) const;
  double eval_points(const PointConfig& config,
                     const std::vector<int>& idx) const;
};

PolarForm blossom(const Polynomial& poly, int arity);

// Right-hand side of the reproduction identity:
//   k!/(k+d)! sum_{(I,B) in P^(k)} Q((a_i)_I) det+(B) M(x | I+B).
// Equals poly(x) on ch_k(A) when degree(poly) <= k.
double reproduce(const ZonotopalTiling& tiling, int k, const Polynomial& poly,
                 const Point& x);

}  // namespace zonospline

#endif
