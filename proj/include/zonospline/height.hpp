#ifndef ZONOSPLINE_HEIGHT_HPP
#define ZONOSPLINE_HEIGHT_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "zonospline/point_config.hpp"

namespace zonospline {

// One exact height per point index. Repeated points may (and for genericity
// must) carry distinct heights.
struct HeightFunction {
  std::vector<Rational> values;

  const Rational& at(int i) const { return values[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(values.size()); }
};

// A height function is generic when every affinely dependent (d+2)-subset of
// the lifted cloud {(a_i, h_i)} lies on a vertical hyperplane, i.e. its
// projection to R^d already fails to span a full hyperplane complement.
// Exhaustive O(n^{d+2}) check with exact arithmetic.
bool validate_generic_height(const PointConfig& config,
                             const HeightFunction& h);

// Identifies the offending (d+2)-subset, if any. Used for diagnostics.
std::optional<std::vector<int>> find_non_generic_subset(
    const PointConfig& config, const HeightFunction& h);

struct HeightGenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Draws heights num/2^16 with num uniform in [1, 2^31) until the result is
// generic. Throws HeightGenerationError after `budget` failed attempts.
template <class URBG>
HeightFunction generic_height_from(URBG& gen, const PointConfig& config,
                                   int budget) {
  std::uniform_int_distribution<std::int64_t> dist(1, (std::int64_t(1) << 31) - 1);
  for (int attempt = 0; attempt < budget; ++attempt) {
    HeightFunction h;
    h.values.reserve(static_cast<size_t>(config.size()));
    for (int i = 0; i < config.size(); ++i)
      h.values.push_back(Rational(BigInt(dist(gen)), BigInt(1) << 16));
    if (validate_generic_height(config, h)) return h;
  }
  throw HeightGenerationError(
      "no generic height function found within the retry budget; "
      "the configuration or the generator looks pathological");
}

HeightFunction random_generic_height(const PointConfig& config,
                                     std::uint64_t seed, int budget = 64);

}  // namespace zonospline

#endif
