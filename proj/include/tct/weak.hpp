#pragma once

#include "tct/channel.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tct {

// Coupling strength and initial pointer state for the weak-measurement
// protocols. The pointer is a qubit prepared in |up_x> = (|0>+|1>)/sqrt(2)
// and coupled through exp(-i (eps/2) B (x) sigma_y).
struct PointerConfig {
  double epsilon = 0.2;
  bool strong_coupling_warning = false; // set when epsilon > 0.9

  explicit PointerConfig(double eps);
};

// One two-time correlation experiment: couple obs_early at t1, evolve the
// system through `channel`, couple obs_late at t2.
struct ProtocolRun {
  KrausChannel channel;
  Operator obs_early;
  Operator obs_late;
  DensityState state;
  PointerConfig config;

  ProtocolRun(KrausChannel ch, Operator early, Operator late, DensityState rho, PointerConfig cfg);
};

// Joint distribution of the two pointer readouts (s1, s2), indexed
// (+,+),(+,-),(-,+),(-,-), plus the system marginal after readout
// (averaged over outcomes).
struct OutcomeDistribution {
  std::array<double, 4> probs{};
  DensityState post_state;

  double prob(int s1, int s2) const { return probs[static_cast<std::size_t>((s1 < 0) * 2 + (s2 < 0))]; }
};

// exp(-i (eps/2) obs (x) sigma_y) on the system (x) pointer space,
// equal to cos((eps/2) obs) (x) I - i sin((eps/2) obs) (x) sigma_y.
Operator coupling_unitary(const Operator& obs, const PointerConfig& config);

// Exact Schroedinger-picture evolution on system (x) pointer1 (x) pointer2
// followed by a sigma_z (x) sigma_z readout of the pointers.
OutcomeDistribution run_two_pointer(const ProtocolRun& run);

// E(s1 s2) = (eps^2/2) Tr({B_i(t1), B_j(t2)} rho) + eps^4 f + O(eps^6).
double product_expectation(const OutcomeDistribution& dist);
double product_variance(const OutcomeDistribution& dist);

// n independent draws of s1*s2; draw i depends only on (seed, i).
std::vector<int> sample_trials(const ProtocolRun& run, long long n, std::uint64_t seed);
double sample_mean(const ProtocolRun& run, long long n, std::uint64_t seed);

// Trace distance between the system marginal after the early coupling and
// the input state. Requires an identity channel so that only measurement
// disturbance is isolated.
double back_action(const ProtocolRun& run);

// Signed eps^4 coefficient of the product expectation:
//   f = -[ (1/48) Tr(rho {B_i^3, B_j(t2)})
//        + (1/12) Tr(rho {B_i, (B_j^3)(t2)})
//        + (1/16) Tr(rho B_i {B_i, B_j(t2)} B_i) ],
// with X(t2) = heisenberg_apply(channel, X). |f| <= (1/3)||B||^4 for
// equal-norm bases.
double systematic_f(const ProtocolRun& run);

// Single-pointer scheme: two configurations, each coupling both observables
// to one pointer through exp(+i eps B (x) P) with
//   A: P_early = (sz+sx)/sqrt2, P_late = (sz-sx)/sqrt2
//   B: P_early = (-sz+sx)/sqrt2, P_late = (sz+sx)/sqrt2
// and a -sigma_z readout. (E1+E2)/2 = eps^2 Tr(rho {B_i(t1),B_j(t2)}) + O(eps^4).
struct SinglePointerExpectations {
  double e1 = 0.0;
  double e2 = 0.0;
};
SinglePointerExpectations single_pointer_expectations(const ProtocolRun& run);

// Draws of the +-1 pointer readout for one single-pointer configuration.
double single_pointer_sample_mean(const ProtocolRun& run, int configuration, long long n,
                                  std::uint64_t seed);

} // namespace tct
