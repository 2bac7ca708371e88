#include "tct/reconstruction.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace tct {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}

} // namespace

bool check_invertibility(const TemporalCovariance& cov, double tolerance) {
  Eigen::JacobiSVD<RealMatrix> svd(cov.sigma);
  return svd.singularValues().minCoeff() > tolerance;
}

RealMatrix recover_m(const TemporalCovariance& cov_t, const TemporalCovariance& cov_0,
                     double tolerance) {
  if (cov_t.sigma.rows() != cov_0.sigma.rows())
    throw_error(ErrorCode::DimensionMismatch, "covariance size mismatch");
  if (!check_invertibility(cov_0, tolerance))
    throw_error(ErrorCode::SingularState,
                "equal-time covariance is singular: the state does not sample the full space and "
                "complete knowledge of the evolution cannot be gained");
  // M sigma0 = sigma_t with sigma0 symmetric up to estimation noise; solve on
  // the transposed system
  const RealMatrix sym0 = 0.5 * (cov_0.sigma + cov_0.sigma.transpose());
  return sym0.partialPivLu().solve(cov_t.sigma.transpose()).transpose();
}

RealVector recover_chi(const RealMatrix& m, const RealVector& mean_early,
                       const RealVector& mean_late) {
  if (m.cols() != mean_early.size() || m.rows() != mean_late.size())
    throw_error(ErrorCode::DimensionMismatch, "recover_chi size mismatch");
  return mean_late - m * mean_early;
}

GramMatrix solve_gram_general(const AffineDynamics& dyn, const OperatorBasis& basis,
                              const StructureTensors& tensors) {
  const int n = basis.size();
  const int k = n - 1;
  if (dyn.m.rows() != k || dyn.m.cols() != k || dyn.chi.size() != k)
    throw_error(ErrorCode::DimensionMismatch, "dynamics size mismatch");
  const double sqrt_d = std::sqrt(static_cast<double>(basis.dim()));

  // Unknowns: Hermitian X with X_bc = sum_mu u*_b u_c, parametrized by the
  // diagonal and the (re, im) of the upper triangle.
  const int nun = n * n;
  auto diag_idx = [&](int a) { return a; };
  auto re_idx = [&](int a, int b) { return n + (a * (2 * n - a - 1)) / 2 + (b - a - 1); };
  const int im_base = n + n * (n - 1) / 2;
  auto im_idx = [&](int a, int b) { return im_base + (a * (2 * n - a - 1)) / 2 + (b - a - 1); };

  RealMatrix a = RealMatrix::Zero(nun, nun);
  RealVector rhs = RealVector::Zero(nun);
  // Re(T * X_bc) accumulated into the real parametrization
  auto add = [&](int row, int b, int c, Complex t) {
    if (b == c) {
      a(row, diag_idx(b)) += t.real();
    } else if (b < c) {
      a(row, re_idx(b, c)) += t.real();
      a(row, im_idx(b, c)) -= t.imag();
    } else {
      a(row, re_idx(c, b)) += t.real();
      a(row, im_idx(c, b)) += t.imag();
    }
  };
  auto fg = [&](int x, int y, int z) {
    return Complex(tensors.g(x, y, z), tensors.f(x, y, z));
  };

  int row = 0;
  // M_ij = (1/4) X_bc sum_d (i f_{b,i,d} + g_{b,i,d}) (i f_{d,c,j} + g_{d,c,j})
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Complex t = 0;
          for (int d = 0; d < n; ++d) t += fg(b, i + 1, d) * fg(d, c, j + 1);
          if (t != Complex(0, 0)) add(row, b, c, 0.25 * t);
        }
      rhs(row++) = dyn.m(i, j);
    }
  // B_0 coefficient rows: sqrt(D) * chi_i
  for (int i = 0; i < k; ++i) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Complex t = 0;
        for (int d = 0; d < n; ++d) t += fg(b, i + 1, d) * fg(d, c, 0);
        if (t != Complex(0, 0)) add(row, b, c, 0.25 * t);
      }
    rhs(row++) = sqrt_d * dyn.chi(i);
  }
  // trace preservation: (1/2) X_bc (i f_{b,c,a} + g_{b,c,a}) = sqrt(D) delta_a0
  for (int aa = 0; aa < n; ++aa) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Complex t = fg(b, c, aa);
        if (t != Complex(0, 0)) add(row, b, c, 0.5 * t);
      }
    rhs(row++) = (aa == 0) ? sqrt_d : 0.0;
  }
  if (row != nun) throw_error(ErrorCode::Internal, "gram system has wrong equation count");

  Eigen::ColPivHouseholderQR<RealMatrix> qr(a);
  if (qr.rank() < nun)
    throw_error(ErrorCode::Internal,
                "gram system is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
                    std::to_string(nun) + ")");
  const RealVector sol = qr.solve(rhs);
  const double residual = (a * sol - rhs).norm();

  Matrix x(n, n);
  for (int b = 0; b < n; ++b) x(b, b) = sol(diag_idx(b));
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      x(b, c) = Complex(sol(re_idx(b, c)), sol(im_idx(b, c)));
      x(c, b) = std::conj(x(b, c));
    }

  GramMatrix gram;
  gram.u = std::move(x);
  gram.solve_residual = residual;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram.u.transpose());
  gram.eigenvalues = es.eigenvalues().reverse();
  gram.eigenvectors = es.eigenvectors().rowwise().reverse();
  return gram;
}

GramMatrix solve_gram_qubit(const AffineDynamics& dyn) {
  if (dyn.m.rows() != 3 || dyn.m.cols() != 3 || dyn.chi.size() != 3)
    throw_error(ErrorCode::DimensionMismatch, "qubit closed form needs 3x3 dynamics");
  const RealMatrix& m = dyn.m;
  // chi as a B_0 coefficient
  const RealVector chi_b0 = std::sqrt(2.0) * dyn.chi;
  const double tr_m = m.trace();

  Matrix x = Matrix::Zero(4, 4);
  // completeness Tr(X) = 2 fixes u0*u0 = (Tr M + 1)/2
  x(0, 0) = (tr_m + 1.0) / 2.0;
  for (int i = 0; i < 3; ++i) {
    double im = 0;
    for (int jj = 0; jj < 3; ++jj)
      for (int kk = 0; kk < 3; ++kk) im += levi_civita(i, jj, kk) * (m(kk, jj) - m(jj, kk));
    // X_{i0} = u*_i u_0 = Re + i Im
    x(i + 1, 0) = Complex(chi_b0(i) / 2.0, im / 4.0);
    x(0, i + 1) = std::conj(x(i + 1, 0));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double re = 0.5 * (m(i, j) + m(j, i)) + ((i == j) ? (1.0 - tr_m) / 2.0 : 0.0);
      double im = 0;
      for (int kk = 0; kk < 3; ++kk) im += 0.5 * levi_civita(i, j, kk) * chi_b0(kk);
      x(i + 1, j + 1) = Complex(re, im);
    }

  GramMatrix gram;
  gram.u = std::move(x);
  gram.solve_residual = 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram.u.transpose());
  gram.eigenvalues = es.eigenvalues().reverse();
  gram.eigenvectors = es.eigenvectors().rowwise().reverse();
  return gram;
}

GramMatrix solve_gram(const AffineDynamics& dyn, const OperatorBasis& basis,
                      const StructureTensors& tensors) {
  if (basis.dim() == 2) return solve_gram_qubit(dyn);
  return solve_gram_general(dyn, basis, tensors);
}

KrausChannel kraus_from_gram(const GramMatrix& gram, const OperatorBasis& basis,
                             double clamp_tol) {
  const int n = basis.size();
  if (gram.u.rows() != n) throw_error(ErrorCode::DimensionMismatch, "gram/basis size mismatch");
  if ((gram.u - gram.u.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "gram matrix is not Hermitian");
  std::vector<Operator> ops;
  for (int mu = 0; mu < n; ++mu) {
    const double lam = gram.eigenvalues(mu);
    if (lam < -clamp_tol)
      throw_error(ErrorCode::NotCompletelyPositive,
                  "gram eigenvalue " + std::to_string(lam) +
                      " below -" + std::to_string(clamp_tol) +
                      ": estimation noise too large or dynamics not completely positive");
    if (lam <= clamp_tol) continue; // clamped to zero
    Matrix kmat = Matrix::Zero(basis.dim(), basis.dim());
    for (int a = 0; a < n; ++a) kmat += gram.eigenvectors(a, mu) * basis.element(a).matrix();
    ops.push_back(Operator(std::sqrt(lam) * kmat));
  }
  if (ops.empty()) throw_error(ErrorCode::NotCompletelyPositive, "gram matrix has no positive eigenvalues");
  // defect recorded on the channel; validation left to the caller's tolerance
  return KrausChannel(std::move(ops), std::numeric_limits<double>::infinity());
}

AffineDynamics true_dynamics(const KrausChannel& channel, const OperatorBasis& basis) {
  const int k = basis.traceless_count();
  AffineDynamics dyn;
  dyn.m.resize(k, k);
  dyn.chi.resize(k);
  const double sqrt_d = std::sqrt(static_cast<double>(basis.dim()));
  for (int i = 0; i < k; ++i) {
    const Matrix bt = heisenberg_apply(channel, basis.traceless(i)).matrix();
    for (int j = 0; j < k; ++j)
      dyn.m(i, j) = (bt * basis.traceless(j).matrix()).trace().real() / basis.normalization();
    dyn.chi(i) = (bt * basis.element(0).matrix()).trace().real() / basis.normalization() / sqrt_d;
  }
  return dyn;
}

Reconstruction reconstruct_channel(const DensityState& state, const KrausChannel& truth,
                                   const OperatorBasis& basis, EstimationMode mode,
                                   const Budget& budget, std::uint64_t seed) {
  const int k = basis.traceless_count();
  TemporalCovariance cov_t, cov_0;
  double clamp = tol::clamp_exact;
  long long corr_experiments = 0, mean_experiments = 0, total = 0;

  if (mode == EstimationMode::Exact) {
    if (state.singular())
      throw_error(ErrorCode::SingularState,
                  "initial state is singular; the evolution cannot be fully identified");
    cov_t = exact_covariance(state, truth, basis);
    cov_0 = exact_covariance(state, KrausChannel::identity(state.dim()), basis);
  } else {
    const StructureTensors tensors = structure_tensors(basis);
    cov_t = (mode == EstimationMode::TwoPointer)
                ? sampled_covariance(state, truth, basis, budget, seed)
                : sampled_covariance_single_pointer(state, truth, basis, budget, seed);
    cov_0 = equal_time_from_means(cov_t.mean_early, basis, tensors);
    clamp = 10.0 * budget.delta;
    corr_experiments = static_cast<long long>(k) * k;
    mean_experiments = 2LL * k;
    const long long per_corr =
        (mode == EstimationMode::SinglePointer) ? 2 * budget.trials : budget.trials;
    total = corr_experiments * per_corr + mean_experiments * cov_t.sampled->mean_trials;
  }

  // sampled equal-time matrices carry mean-estimation noise ~ 1/sqrt(N_mean)
  const double invert_tol = (mode == EstimationMode::Exact)
                                ? tol::invertibility
                                : 4.0 / std::sqrt(static_cast<double>(cov_t.sampled->mean_trials));

  AffineDynamics dyn;
  dyn.m = recover_m(cov_t, cov_0, invert_tol);
  dyn.chi = recover_chi(dyn.m, cov_t.mean_early, cov_t.mean_late);

  const StructureTensors tensors = structure_tensors(basis);
  const GramMatrix gram = solve_gram(dyn, basis, tensors);
  KrausChannel kraus = kraus_from_gram(gram, basis, clamp);

  Reconstruction rec{std::move(dyn), std::move(kraus), {}};
  const AffineDynamics truth_dyn = true_dynamics(truth, basis);
  const RealMatrix dm = rec.dynamics.m - truth_dyn.m;
  rec.diagnostics.delta_m_spectral = dm.jacobiSvd().singularValues()(0);
  rec.diagnostics.delta_m_max_entry = dm.cwiseAbs().maxCoeff();
  rec.diagnostics.completeness_defect = rec.kraus.completeness_defect();
  rec.diagnostics.gram_min_eigenvalue = gram.eigenvalues.minCoeff();
  rec.diagnostics.gram_solve_residual = gram.solve_residual;
  Eigen::JacobiSVD<RealMatrix> svd(cov_0.sigma);
  rec.diagnostics.sigma0_min_singular_value = svd.singularValues().minCoeff();
  rec.diagnostics.correlation_experiments = corr_experiments;
  rec.diagnostics.mean_experiments = mean_experiments;
  rec.diagnostics.total_measurements = total;
  return rec;
}

} // namespace tct
