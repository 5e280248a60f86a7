#include "zonospline/point_config.hpp"

#include <numeric>
#include <stdexcept>

#include "zonospline/determinant.hpp"

namespace zonospline {

void PointConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (size() < dim + 1)
    throw std::invalid_argument("need at least d+1 points");
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("point/dimension mismatch");
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  if (!affinely_spans(*this, all))
    throw std::invalid_argument("points do not affinely span R^d");
}

PointConfig make_config(int dim, std::vector<Point> points) {
  PointConfig c;
  c.dim = dim;
  c.points = std::move(points);
  c.validate();
  return c;
}

PointConfig make_config_str(int dim,
                            const std::vector<std::vector<std::string>>& pts) {
  std::vector<Point> points;
  points.reserve(pts.size());
  for (const auto& row : pts) {
    Point p;
    p.reserve(row.size());
    for (const auto& s : row) p.push_back(parse_rational(s));
    points.push_back(std::move(p));
  }
  return make_config(dim, std::move(points));
}

int affine_rank(const PointConfig& config, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  // Gaussian elimination on the difference vectors from the first point.
  const Point& base = config.point(idx[0]);
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < idx.size(); ++i) {
    std::vector<Rational> r(static_cast<size_t>(config.dim));
    for (int j = 0; j < config.dim; ++j)
      r[static_cast<size_t>(j)] =
          config.point(idx[i])[static_cast<size_t>(j)] - base[static_cast<size_t>(j)];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  size_t col = 0;
  while (rank < static_cast<int>(rows.size()) &&
         col < static_cast<size_t>(config.dim)) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) {
      ++col;
      continue;
    }
    std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[static_cast<size_t>(rank)][col];
      for (size_t c = col; c < rows[r].size(); ++c)
        rows[r][c] -= f * rows[static_cast<size_t>(rank)][c];
    }
    ++rank;
    ++col;
  }
  return rank;
}

bool affinely_spans(const PointConfig& config, const std::vector<int>& idx) {
  return affine_rank(config, idx) == config.dim;
}

}  // namespace zonospline
