#include "zonospline/height.hpp"

#include "zonospline/determinant.hpp"
#include "zonospline/detail/subsets.hpp"

namespace zonospline {

namespace {

// Affine dependence of the lifted (d+2)-subset: det((a_s, h_s, 1)_s) == 0.
bool lifted_subset_dependent(const PointConfig& config, const HeightFunction& h,
                             const std::vector<int>& subset) {
  std::vector<std::vector<Rational>> m;
  m.reserve(subset.size());
  for (int i : subset) {
    std::vector<Rational> row = config.point(i);
    row.push_back(h.at(i));
    row.push_back(Rational(1));
    m.push_back(std::move(row));
  }
  return det_exact(std::move(m)) == 0;
}

}  // namespace

std::optional<std::vector<int>> find_non_generic_subset(
    const PointConfig& config, const HeightFunction& h) {
  if (h.size() != config.size())
    throw std::invalid_argument("height/configuration size mismatch");
  const int d = config.dim;
  std::optional<std::vector<int>> offender;
  detail::for_each_subset(config.size(), d + 2, [&](const std::vector<int>& subset) {
    if (!lifted_subset_dependent(config, h, subset)) return true;
    // Dependent lifted subsets are tolerated only on vertical hyperplanes,
    // i.e. when the projected points fail to span R^d.
    if (affine_rank(config, subset) == d) {
      offender = subset;
      return false;
    }
    return true;
  });
  return offender;
}

bool validate_generic_height(const PointConfig& config,
                             const HeightFunction& h) {
  return !find_non_generic_subset(config, h).has_value();
}

HeightFunction random_generic_height(const PointConfig& config,
                                     std::uint64_t seed, int budget) {
  std::mt19937_64 gen(seed);
  return generic_height_from(gen, config, budget);
}

}  // namespace zonospline
