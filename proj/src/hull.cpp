#include "zonospline/hull.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zonospline/determinant.hpp"

namespace zonospline {

bool in_simplex(const PointConfig& config, const std::vector<int>& T,
                const Point& x) {
  // Solve sum_t lambda_t (a_t, 1) = (x, 1) exactly; membership needs a
  // consistent solution with all lambda_t >= 0. Columns are the points of T.
  const int d = config.dim;
  const size_t m = T.size();
  std::vector<std::vector<Rational>> aug(static_cast<size_t>(d + 1),
                                         std::vector<Rational>(m + 1));
  for (size_t c = 0; c < m; ++c) {
    const Point& p = config.point(T[c]);
    for (int r = 0; r < d; ++r) aug[static_cast<size_t>(r)][c] = p[static_cast<size_t>(r)];
    aug[static_cast<size_t>(d)][c] = 1;
  }
  for (int r = 0; r < d; ++r) aug[static_cast<size_t>(r)][m] = x[static_cast<size_t>(r)];
  aug[static_cast<size_t>(d)][m] = 1;

  // Gaussian elimination with exact pivoting.
  const size_t rows = static_cast<size_t>(d + 1);
  std::vector<size_t> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < m && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && aug[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col] / aug[row][col];
      for (size_t c = col; c <= m; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Affine independence of T means every column is a pivot column.
  if (pivot_col_of_row.size() != m)
    throw std::invalid_argument("in_simplex: points not affinely independent");
  // Rows below the pivots must have zero rhs, otherwise x is outside aff(T).
  for (size_t r = m; r < rows; ++r)
    if (aug[r][m] != 0) return false;
  for (size_t r = 0; r < m; ++r) {
    Rational lambda = aug[r][m] / aug[r][pivot_col_of_row[r]];
    if (lambda < 0) return false;
  }
  return true;
}

bool HullOracle::simplex_contains(const std::vector<int>& T) {
  auto it = cache_.find(T);
  if (it != cache_.end()) return it->second;
  bool ok = affine_rank(config_, T) == static_cast<int>(T.size()) - 1 &&
            in_simplex(config_, T, x_);
  cache_.emplace(T, ok);
  return ok;
}

bool HullOracle::in_hull(const std::vector<int>& S) {
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const int d = config_.dim;
  const int n = static_cast<int>(s.size());
  // Full-dimensional simplices first: they carry almost all the hits.
  for (int size = std::min(d + 1, n); size >= 1; --size) {
    std::vector<int> pick(static_cast<size_t>(size));
    std::vector<int> stack;
    // iterative subset enumeration
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      for (int i = 0; i < size; ++i)
        pick[static_cast<size_t>(i)] = s[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      if (simplex_contains(pick)) return true;
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < size; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return false;
}

bool in_hull(const PointConfig& config, const std::vector<int>& S,
             const Point& x) {
  HullOracle oracle(config, x);
  return oracle.in_hull(S);
}

namespace {

Rational simplex_volume(const PointConfig& config, const std::vector<int>& T) {
  auto basis = det_plus(config, T);
  if (!basis) return Rational(0);
  Rational f(1);
  for (int i = 2; i <= config.dim; ++i) f *= i;
  return basis->det / f;
}

}  // namespace

Rational hull_volume_placing(const PointConfig& config,
                             const std::vector<int>& active) {
  const int d = config.dim;
  // Seed simplex: first d+1 points that keep growing the affine rank.
  std::vector<int> seed;
  for (int i : active) {
    std::vector<int> trial = seed;
    trial.push_back(i);
    if (affine_rank(config, trial) == static_cast<int>(seed.size())) seed = trial;
    if (static_cast<int>(seed.size()) == d + 1) break;
  }
  if (static_cast<int>(seed.size()) != d + 1) return Rational(0);

  std::vector<std::vector<int>> simplices{seed};
  Rational volume = simplex_volume(config, seed);

  std::set<int> seeded(seed.begin(), seed.end());
  for (int p : active) {
    if (seeded.count(p)) continue;
    // Boundary facets: (d)-subsets appearing in exactly one simplex.
    std::map<std::vector<int>, std::vector<size_t>> facet_owners;
    for (size_t s = 0; s < simplices.size(); ++s) {
      const auto& simplex = simplices[s];
      for (size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<int> facet;
        for (size_t i = 0; i < simplex.size(); ++i)
          if (i != skip) facet.push_back(simplex[i]);
        std::sort(facet.begin(), facet.end());
        facet_owners[facet].push_back(s);
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [facet, owners] : facet_owners) {
      if (owners.size() != 1) continue;
      const auto& owner = simplices[owners[0]];
      int opposite = -1;
      for (int v : owner)
        if (std::find(facet.begin(), facet.end(), v) == facet.end()) opposite = v;
      // Strictly visible: p and the opposite vertex on opposite open sides.
      std::vector<int> with_o = facet;
      with_o.push_back(opposite);
      auto bo = det_plus(config, with_o);
      Rational sp = det_sub(config, *bo, opposite, p);
      if (sp >= 0) continue;  // p behind or on the facet plane
      std::vector<int> with_p = facet;
      with_p.push_back(p);
      added.push_back(with_p);
      volume += simplex_volume(config, with_p);
    }
    for (auto& s : added) simplices.push_back(std::move(s));
  }
  return volume;
}

bool is_generic_point(const PointConfig& config, const Point& x) {
  const int d = config.dim;
  const int n = config.size();
  std::vector<int> idx(static_cast<size_t>(d));
  // all d-subsets
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
  if (d > n) return true;
  while (true) {
    if (affine_rank(config, idx) == d - 1) {
      // hyperplane spanned by these d points; test det((a_c,1),(x,1))
      std::vector<std::vector<Rational>> m;
      for (int c : idx) {
        auto row = config.point(c);
        row.push_back(Rational(1));
        m.push_back(std::move(row));
      }
      auto row = x;
      row.push_back(Rational(1));
      m.push_back(std::move(row));
      if (det_exact(std::move(m)) == 0) return false;
    }
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - d + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < d; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return true;
}

}  // namespace zonospline
