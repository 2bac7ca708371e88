#include "tct/rng.hpp"

#include <cmath>

namespace tct {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(master ^ (stream << 56)) + index);
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

void normal_pair(std::uint64_t seed, std::uint64_t index, double& z0, double& z1) {
  double u1 = uniform01(seed, 2 * index);
  double u2 = uniform01(seed, 2 * index + 1);
  // avoid log(0)
  if (u1 < 1e-300) u1 = 1e-300;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  z0 = r * std::cos(t);
  z1 = r * std::sin(t);
}

} // namespace tct
