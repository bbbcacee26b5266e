#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mgfix/types.hpp"

namespace mgfix {

/// Seeded source of points. Uses std::mt19937_64 (fully specified by the
/// standard) and its own bit-to-double mapping, so draws are reproducible
/// across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit();

  /// Uniform member of a nonempty bounded interval, honoring open ends.
  double uniform(const Interval& region);

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);

  /// Latin-hypercube style draws: `n` values in `region`, one per equal
  /// stratum, returned in a seeded random order.
  std::vector<double> stratified(const Interval& region, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Clamps `x` into `region` (nudging inward at open ends).
double clamp_into(double x, const Interval& region);

}  // namespace mgfix
