#ifndef ZONOSPLINE_POINT_CONFIG_HPP
#define ZONOSPLINE_POINT_CONFIG_HPP

#include <vector>

#include "zonospline/rational.hpp"

namespace zonospline {

using Point = std::vector<Rational>;

// A configuration of n >= d+1 points in R^d with exact coordinates.
// Points may repeat and may be affinely dependent, but together they must
// affinely span R^d.
struct PointConfig {
  int dim = 0;
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
  const Point& point(int i) const { return points[static_cast<size_t>(i)]; }

  // Throws std::invalid_argument if n < d+1 or the affine span is deficient.
  void validate() const;
};

PointConfig make_config(int dim, std::vector<Point> points);

// Convenience for tests and tools: coordinates given as parseable strings.
PointConfig make_config_str(int dim,
                            const std::vector<std::vector<std::string>>& pts);

// Dimension of the affine hull of the listed points (-1 for empty).
int affine_rank(const PointConfig& config, const std::vector<int>& idx);

bool affinely_spans(const PointConfig& config, const std::vector<int>& idx);

}  // namespace zonospline

#endif
