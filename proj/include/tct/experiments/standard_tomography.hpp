#pragma once

#include "tct/channel.hpp"
#include "tct/types.hpp"

#include <cstdint>

namespace tct {

// Prepare-and-measure baseline: inputs {|0>,|1>,|+>,|+i>}, each output
// tomographed by projective Pauli measurements (3 settings x shots), then the
// Bloch affine map recovered by linear inversion. In the scaled Pauli basis
// the recovered matrix equals M and the offset equals chi*sqrt(2)... the
// returned pair is (M, chi) in the same convention as AffineDynamics.
struct BaselineEstimate {
  RealMatrix m;
  RealVector chi;
  long long total_measurements = 0; // 4 states x 3 settings x shots
};

BaselineEstimate standard_tomography(const KrausChannel& truth, long long shots_per_setting,
                                     std::uint64_t seed);

} // namespace tct
