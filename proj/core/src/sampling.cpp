#include "mgfix/sampling.hpp"

#include <numeric>
#include <utility>

namespace mgfix {

double Sampler::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(const Interval& region) {
  return clamp_into(region.lo + unit() * region.width(), region);
}

std::size_t Sampler::index(std::size_t n) {
  // Modulo bias is negligible for the sizes drawn here.
  return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
}

std::vector<double> Sampler::stratified(const Interval& region, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[index(i)]);
  }
  std::vector<double> out;
  out.reserve(n);
  const double w = region.width() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = region.lo + (static_cast<double>(order[i]) + unit()) * w;
    out.push_back(clamp_into(x, region));
  }
  return out;
}

double clamp_into(double x, const Interval& region) {
  if (region.contains(x)) return x;
  if (x <= region.lo) return region.first();
  return region.last();
}

}  // namespace mgfix
