#include "zonospline/determinant.hpp"

#include <algorithm>
#include <stdexcept>

#include "zonospline/height.hpp"

namespace zonospline {

Rational det_exact(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  if (n == 0) return Rational(1);
  // Bareiss elimination; divisions by the previous pivot are exact.
  Rational prev(1);
  int swaps = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      ++swaps;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational det = m[n - 1][n - 1];
  return (swaps % 2 == 0) ? det : -det;
}

std::vector<int> OrderedBasis::sorted() const {
  std::vector<int> s = order;
  std::sort(s.begin(), s.end());
  return s;
}

int OrderedBasis::row_of(int index) const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == index) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::vector<Rational>> lift_rows(const PointConfig& config,
                                             const std::vector<int>& idx) {
  std::vector<std::vector<Rational>> m;
  m.reserve(idx.size());
  for (int i : idx) {
    std::vector<Rational> row = config.point(i);
    row.push_back(Rational(1));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::optional<OrderedBasis> det_plus(const PointConfig& config,
                                     const std::vector<int>& B) {
  if (static_cast<int>(B.size()) != config.dim + 1)
    throw std::invalid_argument("det_plus: basis must have d+1 indices");
  std::vector<int> order = B;
  std::sort(order.begin(), order.end());
  Rational det = det_exact(lift_rows(config, order));
  if (det == 0) return std::nullopt;
  if (det < 0) {
    std::swap(order[0], order[1]);
    det = -det;
  }
  return OrderedBasis{std::move(order), std::move(det)};
}

Rational det_sub(const PointConfig& config, const OrderedBasis& basis, int j,
                 const Point& x) {
  int row = basis.row_of(j);
  if (row < 0) throw std::invalid_argument("det_sub: index not in basis");
  auto m = lift_rows(config, basis.order);
  std::vector<Rational> rep = x;
  rep.push_back(Rational(1));
  m[static_cast<size_t>(row)] = std::move(rep);
  return det_exact(std::move(m));
}

Rational det_sub(const PointConfig& config, const OrderedBasis& basis, int j,
                 int k) {
  return det_sub(config, basis, j, config.point(k));
}

int lifted_det_sign(const PointConfig& config, const HeightFunction& h,
                    const OrderedBasis& basis, int i) {
  std::vector<std::vector<Rational>> m;
  m.reserve(basis.order.size() + 1);
  auto lifted = [&](int p) {
    std::vector<Rational> row = config.point(p);
    row.push_back(h.at(p));
    row.push_back(Rational(1));
    return row;
  };
  for (int b : basis.order) m.push_back(lifted(b));
  m.push_back(lifted(i));
  return sign_of(det_exact(std::move(m)));
}

bool is_affine_basis(const PointConfig& config, const std::vector<int>& B) {
  return det_plus(config, B).has_value();
}

}  // namespace zonospline
