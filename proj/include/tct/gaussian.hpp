#pragma once

#include "tct/reconstruction.hpp"

#include <cstdint>

namespace tct {

// Quadrature ordering (x1, p1, x2, p2, ...); Omega is block-diagonal
// [[0,1],[-1,0]] per mode. Covariance convention: sigma_vacuum = I/2, i.e.
// sigma_ij = (1/2) <{eta_i - <eta_i>, eta_j - <eta_j>}>, with symplectic
// eigenvalues >= 1/2 for valid states.
RealMatrix symplectic_form(int n_modes);

struct GaussianState {
  RealVector mean;
  RealMatrix cov;

  GaussianState(RealVector mean, RealMatrix cov, double tolerance = 1e-10);
  int n_modes() const { return static_cast<int>(mean.size()) / 2; }

  static GaussianState vacuum(int n_modes);
  // cov = (nbar + 1/2) I
  static GaussianState thermal(int n_modes, double nbar);
  // single mode squeezed vacuum, cov = diag(e^{2r}, e^{-2r})/2
  static GaussianState squeezed(double r);
};

// eta -> M eta + chi with additive Gaussian noise on the second moments.
struct GaussianChannelTruth {
  RealMatrix m;
  RealVector chi;
  RealMatrix noise;

  GaussianChannelTruth(RealMatrix m, RealVector chi, RealMatrix noise);
  int n_modes() const { return static_cast<int>(chi.size()) / 2; }

  static GaussianChannelTruth symplectic(RealMatrix s, RealVector displacement);
  // beam-splitter style loss toward a thermal environment
  static GaussianChannelTruth lossy(int n_modes, double transmissivity, double nbar_env);
  // random symplectic conjugation with displacement and optional added noise
  static GaussianChannelTruth random(int n_modes, std::uint64_t seed, double noise_scale = 0.0);
};

GaussianState propagate(const GaussianState& state, const GaussianChannelTruth& ch);

// sigma(t,t0) = M sigma(t0,t0): channel noise is uncorrelated with the
// time-t0 operators. Means filled from the state and its image.
TemporalCovariance temporal_covariance_gaussian(const GaussianState& state,
                                                const GaussianChannelTruth& ch);

// M = sigma(t,t0) sigma(t0,t0)^{-1}, chi = mean_late - M mean_early. The
// equal-time covariance of a valid Gaussian state is always invertible
// (Williamson); the only failure mode is an invalid input covariance.
AffineDynamics recover_affine_gaussian(const TemporalCovariance& cov_t,
                                       const TemporalCovariance& cov_0);

// Moduli of the eigenvalues of i Omega cov, deduplicated to n values,
// descending (the Williamson diagonal).
RealVector symplectic_eigenvalues(const RealMatrix& cov);

// Random symplectic matrix exp(Omega A), A symmetric.
RealMatrix random_symplectic(int n_modes, std::uint64_t seed, double scale = 0.6);

// Entrywise additive-noise model for estimated moments (std 2/(eps^2 sqrt(N))
// per entry, the statistical budget of the weak protocol).
TemporalCovariance noisy_gaussian_covariance(const TemporalCovariance& exact, double noise_std,
                                             std::uint64_t seed);

} // namespace tct
