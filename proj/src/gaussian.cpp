#include "tct/gaussian.hpp"

#include "tct/rng.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace tct {

RealMatrix symplectic_form(int n_modes) {
  RealMatrix omega = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
  for (int m = 0; m < n_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1;
    omega(2 * m + 1, 2 * m) = -1;
  }
  return omega;
}

RealVector symplectic_eigenvalues(const RealMatrix& cov) {
  if (cov.rows() != cov.cols() || cov.rows() % 2 != 0)
    throw_error(ErrorCode::InvalidArgument, "covariance must be 2n x 2n");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "covariance must be symmetric");
  const int n = static_cast<int>(cov.rows()) / 2;
  const RealMatrix a = symplectic_form(n) * cov;
  Eigen::EigenSolver<RealMatrix> es(a);
  std::vector<double> mods(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) mods[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()(i));
  std::sort(mods.begin(), mods.end(), std::greater<double>());
  RealVector out(n);
  for (int i = 0; i < n; ++i) out(i) = mods[static_cast<std::size_t>(2 * i)]; // +-nu pairs
  return out;
}

GaussianState::GaussianState(RealVector mean_in, RealMatrix cov_in, double tolerance)
    : mean(std::move(mean_in)), cov(std::move(cov_in)) {
  if (cov.rows() != mean.size() || cov.cols() != mean.size() || mean.size() % 2 != 0)
    throw_error(ErrorCode::DimensionMismatch, "Gaussian state shape mismatch");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "Gaussian covariance must be symmetric");
  const RealVector nu = symplectic_eigenvalues(cov);
  if (nu.minCoeff() < 0.5 - tolerance)
    throw_error(ErrorCode::InvalidArgument,
                "covariance violates the uncertainty bound (symplectic eigenvalue " +
                    std::to_string(nu.minCoeff()) + " < 1/2)");
}

GaussianState GaussianState::vacuum(int n_modes) {
  return GaussianState(RealVector::Zero(2 * n_modes),
                       0.5 * RealMatrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::thermal(int n_modes, double nbar) {
  if (nbar < 0) throw_error(ErrorCode::InvalidArgument, "thermal occupation must be >= 0");
  return GaussianState(RealVector::Zero(2 * n_modes),
                       (nbar + 0.5) * RealMatrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::squeezed(double r) {
  RealMatrix cov = RealMatrix::Zero(2, 2);
  cov(0, 0) = 0.5 * std::exp(2 * r);
  cov(1, 1) = 0.5 * std::exp(-2 * r);
  return GaussianState(RealVector::Zero(2), std::move(cov));
}

GaussianChannelTruth::GaussianChannelTruth(RealMatrix m_in, RealVector chi_in, RealMatrix noise_in)
    : m(std::move(m_in)), chi(std::move(chi_in)), noise(std::move(noise_in)) {
  const auto dim = chi.size();
  if (m.rows() != dim || m.cols() != dim || noise.rows() != dim || noise.cols() != dim ||
      dim % 2 != 0)
    throw_error(ErrorCode::DimensionMismatch, "Gaussian channel shape mismatch");
  if ((noise - noise.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "channel noise matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(noise, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw_error(ErrorCode::InvalidArgument, "channel noise matrix must be PSD");
}

GaussianChannelTruth GaussianChannelTruth::symplectic(RealMatrix s, RealVector displacement) {
  const auto dim = displacement.size();
  return GaussianChannelTruth(std::move(s), std::move(displacement), RealMatrix::Zero(dim, dim));
}

GaussianChannelTruth GaussianChannelTruth::lossy(int n_modes, double transmissivity,
                                                 double nbar_env) {
  if (transmissivity < 0 || transmissivity > 1)
    throw_error(ErrorCode::InvalidArgument, "transmissivity must be in [0,1]");
  const int d = 2 * n_modes;
  return GaussianChannelTruth(std::sqrt(transmissivity) * RealMatrix::Identity(d, d),
                              RealVector::Zero(d),
                              (1 - transmissivity) * (nbar_env + 0.5) * RealMatrix::Identity(d, d));
}

GaussianChannelTruth GaussianChannelTruth::random(int n_modes, std::uint64_t seed,
                                                  double noise_scale) {
  const int d = 2 * n_modes;
  const RealMatrix s = random_symplectic(n_modes, derive_seed(seed, stream::generator, 21));
  RealVector chi(d);
  const std::uint64_t s2 = derive_seed(seed, stream::generator, 22);
  for (int i = 0; i < d; ++i) {
    double z0, z1;
    normal_pair(s2, static_cast<std::uint64_t>(i), z0, z1);
    chi(i) = z0;
  }
  RealMatrix noise = RealMatrix::Zero(d, d);
  if (noise_scale > 0) {
    const std::uint64_t s3 = derive_seed(seed, stream::generator, 23);
    RealMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double z0, z1;
        normal_pair(s3, static_cast<std::uint64_t>(i) * d + j, z0, z1);
        g(i, j) = z0;
      }
    noise = noise_scale * (g * g.transpose()) / d; // PSD by construction
  }
  return GaussianChannelTruth(s, std::move(chi), std::move(noise));
}

GaussianState propagate(const GaussianState& state, const GaussianChannelTruth& ch) {
  if (state.mean.size() != ch.chi.size())
    throw_error(ErrorCode::DimensionMismatch, "state/channel mode mismatch");
  RealVector mean = ch.m * state.mean + ch.chi;
  RealMatrix cov = ch.m * state.cov * ch.m.transpose() + ch.noise;
  return GaussianState(std::move(mean), 0.5 * (cov + cov.transpose()));
}

TemporalCovariance temporal_covariance_gaussian(const GaussianState& state,
                                                const GaussianChannelTruth& ch) {
  if (state.mean.size() != ch.chi.size())
    throw_error(ErrorCode::DimensionMismatch, "state/channel mode mismatch");
  TemporalCovariance cov;
  cov.sigma = ch.m * state.cov;
  cov.mean_early = state.mean;
  cov.mean_late = ch.m * state.mean + ch.chi;
  return cov;
}

AffineDynamics recover_affine_gaussian(const TemporalCovariance& cov_t,
                                       const TemporalCovariance& cov_0) {
  if (cov_t.sigma.rows() != cov_0.sigma.rows())
    throw_error(ErrorCode::DimensionMismatch, "covariance size mismatch");
  const RealVector nu = symplectic_eigenvalues(0.5 * (cov_0.sigma + cov_0.sigma.transpose()));
  if (nu.minCoeff() < 0.5 - 1e-6)
    throw_error(ErrorCode::InvalidArgument,
                "equal-time covariance is not a valid Gaussian covariance (symplectic eigenvalue " +
                    std::to_string(nu.minCoeff()) + " < 1/2)");
  const RealMatrix sym0 = 0.5 * (cov_0.sigma + cov_0.sigma.transpose());
  AffineDynamics dyn;
  dyn.m = sym0.partialPivLu().solve(cov_t.sigma.transpose()).transpose();
  dyn.chi = cov_t.mean_late - dyn.m * cov_t.mean_early;
  return dyn;
}

RealMatrix random_symplectic(int n_modes, std::uint64_t seed, double scale) {
  const int d = 2 * n_modes;
  RealMatrix sym(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      double z0, z1;
      normal_pair(seed, static_cast<std::uint64_t>(i) * d + j, z0, z1);
      sym(i, j) = sym(j, i) = scale * z0;
    }
  const RealMatrix gen = symplectic_form(n_modes) * sym;
  return gen.exp();
}

TemporalCovariance noisy_gaussian_covariance(const TemporalCovariance& exact, double noise_std,
                                             std::uint64_t seed) {
  TemporalCovariance out = exact;
  const int d = static_cast<int>(exact.sigma.rows());
  const std::uint64_t s = derive_seed(seed, stream::moment_noise, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double z0, z1;
      normal_pair(s, static_cast<std::uint64_t>(i) * d + j, z0, z1);
      out.sigma(i, j) += noise_std * z0;
    }
  const std::uint64_t sm = derive_seed(seed, stream::moment_noise, 1);
  for (int i = 0; i < d; ++i) {
    double z0, z1;
    normal_pair(sm, static_cast<std::uint64_t>(i), z0, z1);
    out.mean_early(i) += noise_std * z0;
    out.mean_late(i) += noise_std * z1;
  }
  return out;
}

} // namespace tct
