#include "tct/covariance.hpp"

#include "tct/rng.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace tct {

Budget Budget::from_rates(double epsilon, long long trials, long long mean_trials,
                          bool correct_systematic) {
  if (!(epsilon > 0) || trials < 1)
    throw_error(ErrorCode::InvalidArgument, "budget needs epsilon > 0 and trials >= 1");
  Budget b;
  b.epsilon = epsilon;
  b.trials = trials;
  b.mean_trials = mean_trials > 0 ? mean_trials : trials;
  b.correct_systematic = correct_systematic;
  b.delta = 2.0 / (epsilon * epsilon * std::sqrt(static_cast<double>(trials)));
  return b;
}

EpsilonChoice optimal_epsilon(double delta, double f_abs) {
  if (!(delta > 0) || !(f_abs > 0))
    throw_error(ErrorCode::InvalidArgument, "optimal_epsilon needs positive delta and |f|");
  EpsilonChoice out;
  out.value = std::sqrt(delta / f_abs);
  out.weak_regime_warning = out.value >= 1.0;
  // validity requires delta << (1/3)||B||^4 >= |f|; |f| is the available proxy
  out.delta_validity_warning = delta > f_abs / 3.0;
  return out;
}

long long required_trials(double delta, double f_abs) {
  if (!(delta > 0) || !(f_abs > 0))
    throw_error(ErrorCode::InvalidArgument, "required_trials needs positive delta and |f|");
  return static_cast<long long>(std::ceil(4.0 * f_abs * f_abs / std::pow(delta, 4)));
}

long long required_trials_norm_bound(double delta, double b_norm) {
  if (!(delta > 0) || !(b_norm > 0))
    throw_error(ErrorCode::InvalidArgument, "required_trials_norm_bound needs positive inputs");
  return static_cast<long long>(std::ceil(4.0 / 9.0 * std::pow(b_norm, 8) / std::pow(delta, 4)));
}

TemporalCovariance exact_covariance(const DensityState& state, const KrausChannel& channel,
                                    const OperatorBasis& basis) {
  if (state.dim() != channel.dim() || state.dim() != basis.dim())
    throw_error(ErrorCode::DimensionMismatch, "covariance inputs dimension mismatch");
  const int k = basis.traceless_count();
  const Matrix& rho = state.matrix();
  std::vector<Matrix> late(static_cast<std::size_t>(k));
  TemporalCovariance cov;
  cov.sigma.resize(k, k);
  cov.mean_early.resize(k);
  cov.mean_late.resize(k);
  for (int i = 0; i < k; ++i) {
    late[static_cast<std::size_t>(i)] = heisenberg_apply(channel, basis.traceless(i)).matrix();
    cov.mean_early(i) = (rho * basis.traceless(i).matrix()).trace().real();
    cov.mean_late(i) = (rho * late[static_cast<std::size_t>(i)]).trace().real();
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Matrix& bl = late[static_cast<std::size_t>(i)];
      const Matrix& be = basis.traceless(j).matrix();
      const double corr = (rho * (bl * be + be * bl)).trace().real();
      cov.sigma(i, j) = corr - 2.0 * cov.mean_late(i) * cov.mean_early(j);
    }
  return cov;
}

RealVector sample_means(const DensityState& state, const OperatorBasis& basis, long long trials,
                        std::uint64_t seed) {
  if (trials < 1) throw_error(ErrorCode::InvalidArgument, "mean estimation needs trials >= 1");
  const int k = basis.traceless_count();
  RealVector means(k);
  for (int i = 0; i < k; ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(basis.traceless(i).matrix());
    const int d = state.dim();
    Eigen::VectorXd probs(d), cdf(d);
    double acc = 0;
    for (int a = 0; a < d; ++a) {
      const auto v = es.eigenvectors().col(a);
      double p = (v.adjoint() * state.matrix() * v)(0).real();
      if (p < 0) p = 0;
      acc += p;
      cdf(a) = acc;
    }
    cdf /= acc;
    const std::uint64_t s = derive_seed(seed, stream::mean_early, static_cast<std::uint64_t>(i));
    double sum = 0;
    for (long long t = 0; t < trials; ++t) {
      const double u = uniform01(s, static_cast<std::uint64_t>(t));
      int a = 0;
      while (a + 1 < d && u >= cdf(a)) ++a;
      sum += es.eigenvalues()(a);
    }
    means(i) = sum / static_cast<double>(trials);
  }
  return means;
}

namespace {

TemporalCovariance sampled_covariance_impl(const DensityState& state, const KrausChannel& channel,
                                           const OperatorBasis& basis, const Budget& budget,
                                           std::uint64_t seed, bool single_pointer) {
  if (state.dim() != channel.dim() || state.dim() != basis.dim())
    throw_error(ErrorCode::DimensionMismatch, "covariance inputs dimension mismatch");
  const int k = basis.traceless_count();
  const double eps = budget.epsilon;
  const double eps2 = eps * eps;
  const PointerConfig cfg(eps);
  const long long n = budget.trials;
  const long long nm = budget.mean_trials > 0 ? budget.mean_trials : n;

  TemporalCovariance cov;
  cov.sigma.resize(k, k);

  // raw anticommutator estimates; entry (i_late, j_early)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const ProtocolRun run(channel, basis.traceless(j), basis.traceless(i), state, cfg);
      const std::uint64_t s =
          derive_seed(seed, stream::correlation, static_cast<std::uint64_t>(i) * k + j);
      double est;
      if (single_pointer) {
        const double m1 = single_pointer_sample_mean(run, 1, n, derive_seed(s, 1, 0));
        const double m2 = single_pointer_sample_mean(run, 2, n, derive_seed(s, 2, 0));
        est = (m1 + m2) / (2.0 * eps2);
      } else {
        est = (2.0 / eps2) * sample_mean(run, n, s);
      }
      if (budget.correct_systematic) est -= 2.0 * eps2 * systematic_f(run);
      cov.sigma(i, j) = est;
    }

  cov.mean_early = sample_means(state, basis, nm, derive_seed(seed, stream::mean_early, 0));
  cov.mean_late =
      sample_means(apply_channel(channel, state), basis, nm, derive_seed(seed, stream::mean_late, 0));
  cov.sigma -= 2.0 * cov.mean_late * cov.mean_early.transpose();

  SampledProvenance prov;
  prov.trials_per_correlation = n;
  prov.mean_trials = nm;
  prov.epsilon = eps;
  prov.seed = seed;
  prov.corrected = budget.correct_systematic;
  cov.sampled = prov;
  return cov;
}

} // namespace

TemporalCovariance sampled_covariance(const DensityState& state, const KrausChannel& channel,
                                      const OperatorBasis& basis, const Budget& budget,
                                      std::uint64_t seed) {
  return sampled_covariance_impl(state, channel, basis, budget, seed, false);
}

TemporalCovariance sampled_covariance_single_pointer(const DensityState& state,
                                                     const KrausChannel& channel,
                                                     const OperatorBasis& basis,
                                                     const Budget& budget, std::uint64_t seed) {
  return sampled_covariance_impl(state, channel, basis, budget, seed, true);
}

TemporalCovariance equal_time_from_means(const RealVector& means, const OperatorBasis& basis,
                                         const StructureTensors& tensors) {
  const int k = basis.traceless_count();
  if (means.size() != k || tensors.size() != basis.size())
    throw_error(ErrorCode::DimensionMismatch, "equal_time_from_means size mismatch");
  const double mean0 = 1.0 / std::sqrt(static_cast<double>(basis.dim())); // <B_0> exactly
  TemporalCovariance cov;
  cov.sigma.resize(k, k);
  cov.mean_early = means;
  cov.mean_late = means;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double corr = tensors.g(i + 1, j + 1, 0) * mean0;
      for (int c = 0; c < k; ++c) corr += tensors.g(i + 1, j + 1, c + 1) * means(c);
      cov.sigma(i, j) = corr - 2.0 * means(i) * means(j);
    }
  return cov;
}

} // namespace tct
