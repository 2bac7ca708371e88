#pragma once

#include <cstdint>

namespace tct {

// Counter-based deterministic randomness. Every draw is a pure function of
// (seed, index), so trial i of a stream is the same value no matter which
// worker computes it or in which order. The constants are frozen by a golden
// test; changing them breaks bit-reproducibility of all sampled outputs.

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Stream/substream derivation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

// i-th draw of a stream, uniform on [0, 1).
double uniform01(std::uint64_t seed, std::uint64_t index);

// Pair of standard normal deviates from draws (2*index, 2*index+1) of the
// stream (Box-Muller).
void normal_pair(std::uint64_t seed, std::uint64_t index, double& z0, double& z1);

// Stream tags used when deriving per-task seeds from a master seed.
namespace stream {
inline constexpr std::uint64_t correlation = 1;
inline constexpr std::uint64_t mean_early = 2;
inline constexpr std::uint64_t mean_late = 3;
inline constexpr std::uint64_t repetition = 4;
inline constexpr std::uint64_t baseline = 5;
inline constexpr std::uint64_t moment_noise = 6;
inline constexpr std::uint64_t generator = 7;
} // namespace stream

} // namespace tct
