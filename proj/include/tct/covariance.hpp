#pragma once

#include "tct/basis.hpp"
#include "tct/weak.hpp"

#include <cstdint>
#include <optional>

namespace tct {

// Two-time covariance matrix over the traceless basis elements.
// Orientation: sigma(i, j) correlates the LATE-time observable B_i with the
// EARLY-time observable B_j,
//   sigma_ij = Tr({B_i(t2), B_j(t1)} rho) - 2 <B_i(t2)> <B_j(t1)>,
// so that sigma(t,t0) = M sigma(t0,t0) holds with no transposes.
struct SampledProvenance {
  long long trials_per_correlation = 0;
  long long mean_trials = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  bool corrected = false;
};

struct TemporalCovariance {
  RealMatrix sigma;
  RealVector mean_early;
  RealVector mean_late;
  std::optional<SampledProvenance> sampled; // empty for exact mode

  int traceless_count() const { return static_cast<int>(sigma.rows()); }
};

// Per-entry error budget of the weak protocol. Either built from a target
// error via the paper's formulas, or directly from (epsilon, trials); the
// statistical error 2/(eps^2 sqrt(N)) fills `delta` in the latter case.
struct Budget {
  double delta = 0.0;
  double epsilon = 0.0;
  long long trials = 0;
  long long mean_trials = 0; // defaults to `trials`
  bool correct_systematic = false;

  static Budget from_rates(double epsilon, long long trials, long long mean_trials = 0,
                           bool correct_systematic = false);
};

struct EpsilonChoice {
  double value = 0.0;
  bool weak_regime_warning = false;    // value >= 1
  bool delta_validity_warning = false; // delta not << the systematic bound
};

// Optimal coupling sqrt(delta/|f|) balancing statistical and systematic error.
EpsilonChoice optimal_epsilon(double delta, double f_abs);

// N = ceil(4 f^2 / delta^4).
long long required_trials(double delta, double f_abs);
// Basis-level bound ceil((4/9) ||B||^8 / delta^4); coincides with
// required_trials at f = (1/3)||B||^4.
long long required_trials_norm_bound(double delta, double b_norm);

// Trace-formula evaluation with B(t2) = heisenberg_apply(channel, B).
TemporalCovariance exact_covariance(const DensityState& state, const KrausChannel& channel,
                                    const OperatorBasis& basis);

// Weak-measurement estimate: each entry from `budget.trials` pointer-product
// samples, means from projective sampling of each element's eigenbasis.
// Fully deterministic given `seed`.
TemporalCovariance sampled_covariance(const DensityState& state, const KrausChannel& channel,
                                      const OperatorBasis& basis, const Budget& budget,
                                      std::uint64_t seed);

// Single-pointer variant (two configurations per entry, each with its own
// `budget.trials` samples).
TemporalCovariance sampled_covariance_single_pointer(const DensityState& state,
                                                     const KrausChannel& channel,
                                                     const OperatorBasis& basis,
                                                     const Budget& budget, std::uint64_t seed);

// Equal-time covariance assembled from mean estimates alone: at t1 = t2,
// {B_i,B_j} = g_ijc B_c, so no correlation experiments are needed.
TemporalCovariance equal_time_from_means(const RealVector& means, const OperatorBasis& basis,
                                         const StructureTensors& tensors);

// Projective estimate of <B_i> for every traceless element on `state`.
RealVector sample_means(const DensityState& state, const OperatorBasis& basis, long long trials,
                        std::uint64_t seed);

} // namespace tct
