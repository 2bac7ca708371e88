#include "tct/weak.hpp"

#include "tct/rng.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace tct {

namespace {

const Matrix& sigma_x() {
  static const Matrix m = [] {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1;
    return x;
  }();
  return m;
}

const Matrix& sigma_y() {
  static const Matrix m = [] {
    Matrix y = Matrix::Zero(2, 2);
    y(0, 1) = Complex(0, -1);
    y(1, 0) = Complex(0, 1);
    return y;
  }();
  return m;
}

const Matrix& sigma_z() {
  static const Matrix m = [] {
    Matrix z = Matrix::Identity(2, 2);
    z(1, 1) = -1;
    return z;
  }();
  return m;
}

const Matrix& pointer_init() { // |up_x><up_x|
  static const Matrix m = [] {
    Matrix p(2, 2);
    p << 0.5, 0.5, 0.5, 0.5;
    return p;
  }();
  return m;
}

struct TrigPair {
  Matrix cos_half; // cos((eps/2) B)
  Matrix sin_half; // sin((eps/2) B)
};

TrigPair half_angle(const Operator& obs, double eps) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(obs.matrix());
  const Eigen::VectorXd w = es.eigenvalues();
  Eigen::VectorXd c(w.size()), s(w.size());
  for (int k = 0; k < w.size(); ++k) {
    c(k) = std::cos(eps * w(k) / 2);
    s(k) = std::sin(eps * w(k) / 2);
  }
  const Matrix& v = es.eigenvectors();
  return {v * c.asDiagonal() * v.adjoint(), v * s.asDiagonal() * v.adjoint()};
}

Matrix matrix_sin(const Operator& obs, double eps) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(obs.matrix());
  Eigen::VectorXd s = (eps * es.eigenvalues().array()).sin();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

PointerConfig::PointerConfig(double eps) : epsilon(eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw_error(ErrorCode::InvalidArgument, "coupling strength must satisfy 0 < epsilon < 1");
  strong_coupling_warning = eps > 0.9;
}

ProtocolRun::ProtocolRun(KrausChannel ch, Operator early, Operator late, DensityState rho,
                         PointerConfig cfg)
    : channel(std::move(ch)), obs_early(std::move(early)), obs_late(std::move(late)),
      state(std::move(rho)), config(cfg) {
  const int d = state.dim();
  if (channel.dim() != d || obs_early.dim() != d || obs_late.dim() != d)
    throw_error(ErrorCode::DimensionMismatch, "protocol run dimension mismatch");
  if (!obs_early.is_hermitian() || !obs_late.is_hermitian())
    throw_error(ErrorCode::InvalidArgument, "protocol observables must be Hermitian");
}

Operator coupling_unitary(const Operator& obs, const PointerConfig& config) {
  if (!obs.is_hermitian()) throw_error(ErrorCode::InvalidArgument, "coupling observable must be Hermitian");
  const auto [c, s] = half_angle(obs, config.epsilon);
  Matrix u = Eigen::kroneckerProduct(c, Matrix::Identity(2, 2)).eval();
  u -= Complex(0, 1) * Eigen::kroneckerProduct(s, sigma_y()).eval();
  return Operator(std::move(u));
}

OutcomeDistribution run_two_pointer(const ProtocolRun& run) {
  const int d = run.state.dim();
  const double eps = run.config.epsilon;
  const Matrix id = Matrix::Identity(d, d);
  const Matrix id2 = Matrix::Identity(2, 2);

  Matrix joint = Eigen::kroneckerProduct(run.state.matrix(),
                                         Eigen::kroneckerProduct(pointer_init(), pointer_init()).eval())
                     .eval();

  const auto [c1, s1] = half_angle(run.obs_early, eps);
  Matrix u1 = Eigen::kroneckerProduct(c1, Eigen::kroneckerProduct(id2, id2).eval()).eval();
  u1 -= Complex(0, 1) * Eigen::kroneckerProduct(s1, Eigen::kroneckerProduct(sigma_y(), id2).eval()).eval();
  joint = u1 * joint * u1.adjoint();

  Matrix evolved = Matrix::Zero(4 * d, 4 * d);
  for (const auto& k : run.channel.operators()) {
    const Matrix kk = Eigen::kroneckerProduct(k.matrix(), Matrix::Identity(4, 4)).eval();
    evolved += kk * joint * kk.adjoint();
  }
  joint = std::move(evolved);

  const auto [c2, s2] = half_angle(run.obs_late, eps);
  Matrix u2 = Eigen::kroneckerProduct(c2, Eigen::kroneckerProduct(id2, id2).eval()).eval();
  u2 -= Complex(0, 1) * Eigen::kroneckerProduct(s2, Eigen::kroneckerProduct(id2, sigma_y()).eval()).eval();
  joint = u2 * joint * u2.adjoint();

  // z-basis readout of both pointers; marginal system state by partial trace
  std::array<double, 4> probs{};
  Matrix marginal = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
          const Complex v = joint(4 * i + 2 * p1 + p2, 4 * j + 2 * p1 + p2);
          marginal(i, j) += v;
          if (i == j) probs[static_cast<std::size_t>(2 * p1 + p2)] += v.real();
        }
  double total = 0;
  for (auto& p : probs) {
    if (p < 0 && p > -1e-12) p = 0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw_error(ErrorCode::Internal, "outcome distribution not normalized");
  for (auto& p : probs) p /= total;
  marginal = 0.5 * (marginal + marginal.adjoint()).eval();
  return OutcomeDistribution{probs, DensityState(std::move(marginal))};
}

double product_expectation(const OutcomeDistribution& dist) {
  return dist.probs[0] - dist.probs[1] - dist.probs[2] + dist.probs[3];
}

double product_variance(const OutcomeDistribution& dist) {
  const double e = product_expectation(dist);
  return 1.0 - e * e;
}

std::vector<int> sample_trials(const ProtocolRun& run, long long n, std::uint64_t seed) {
  if (n < 1) throw_error(ErrorCode::InvalidArgument, "trial count must be >= 1");
  const OutcomeDistribution dist = run_two_pointer(run);
  const double c0 = dist.probs[0];
  const double c1 = c0 + dist.probs[1];
  const double c2 = c1 + dist.probs[2];
  std::vector<int> out(static_cast<std::size_t>(n));
  for (long long t = 0; t < n; ++t) {
    const double u = uniform01(seed, static_cast<std::uint64_t>(t));
    // products: (+,+)->+1 (+,-)->-1 (-,+)->-1 (-,-)->+1
    out[static_cast<std::size_t>(t)] = (u < c0) ? 1 : (u < c1) ? -1 : (u < c2) ? -1 : 1;
  }
  return out;
}

double sample_mean(const ProtocolRun& run, long long n, std::uint64_t seed) {
  if (n < 1) throw_error(ErrorCode::InvalidArgument, "trial count must be >= 1");
  const OutcomeDistribution dist = run_two_pointer(run);
  const double c0 = dist.probs[0];
  const double c1 = c0 + dist.probs[1];
  const double c2 = c1 + dist.probs[2];
  long long sum = 0;
  for (long long t = 0; t < n; ++t) {
    const double u = uniform01(seed, static_cast<std::uint64_t>(t));
    sum += (u < c0) ? 1 : (u < c1) ? -1 : (u < c2) ? -1 : 1;
  }
  return static_cast<double>(sum) / static_cast<double>(n);
}

double back_action(const ProtocolRun& run) {
  if (!is_identity_channel(run.channel))
    throw_error(ErrorCode::InvalidArgument, "back_action isolates measurement disturbance; channel must be identity");
  const auto [c, s] = half_angle(run.obs_early, run.config.epsilon);
  const Matrix marginal = c * run.state.matrix() * c + s * run.state.matrix() * s;
  return trace_distance(marginal, run.state.matrix());
}

double systematic_f(const ProtocolRun& run) {
  const Matrix& rho = run.state.matrix();
  const Matrix& bi = run.obs_early.matrix();
  const Matrix bi3 = bi * bi * bi;
  const Matrix bt = heisenberg_apply(run.channel, run.obs_late).matrix();
  const Matrix& bl = run.obs_late.matrix();
  const Matrix b3t = heisenberg_apply(run.channel, Operator(bl * bl * bl)).matrix();
  const auto acomm = [](const Matrix& a, const Matrix& b) { return (a * b + b * a).eval(); };
  const Complex t1 = (rho * acomm(bi3, bt)).trace() / 48.0;
  const Complex t2 = (rho * acomm(bi, b3t)).trace() / 12.0;
  const Complex t3 = (rho * (bi * acomm(bi, bt) * bi)).trace() / 16.0;
  return -(t1 + t2 + t3).real();
}

namespace {

// exp(i * eps * B (x) P) for Hermitian B (system) and P (pointer qubit),
// built per eigenvalue of B
Matrix joint_coupling(const Operator& obs, const Matrix& pointer_op, double eps) {
  const int d = obs.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> eb(obs.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> ep(pointer_op);
  Matrix u = Matrix::Zero(2 * d, 2 * d);
  for (int k = 0; k < d; ++k) {
    const Matrix proj = eb.eigenvectors().col(k) * eb.eigenvectors().col(k).adjoint();
    Eigen::Vector2cd phases;
    for (int l = 0; l < 2; ++l)
      phases(l) = std::exp(Complex(0, eps * eb.eigenvalues()(k) * ep.eigenvalues()(l)));
    const Matrix rot = ep.eigenvectors() * phases.asDiagonal() * ep.eigenvectors().adjoint();
    u += Eigen::kroneckerProduct(proj, rot).eval();
  }
  return u;
}

double single_pointer_readout(const ProtocolRun& run, const Matrix& p_early, const Matrix& p_late) {
  const int d = run.state.dim();
  const double eps = run.config.epsilon;
  Matrix joint = Eigen::kroneckerProduct(run.state.matrix(), pointer_init()).eval();
  const Matrix u1 = joint_coupling(run.obs_early, p_early, eps);
  joint = u1 * joint * u1.adjoint();
  Matrix evolved = Matrix::Zero(2 * d, 2 * d);
  for (const auto& k : run.channel.operators()) {
    const Matrix kk = Eigen::kroneckerProduct(k.matrix(), Matrix::Identity(2, 2)).eval();
    evolved += kk * joint * kk.adjoint();
  }
  const Matrix u2 = joint_coupling(run.obs_late, p_late, eps);
  joint = u2 * evolved * u2.adjoint();
  // readout -sigma_z; sign fixed so (E1+E2)/2 estimates +eps^2 <{B_i, B_j(t2)}>
  const Matrix zread = Eigen::kroneckerProduct(Matrix::Identity(d, d), (-sigma_z()).eval()).eval();
  return (zread * joint).trace().real();
}

void single_pointer_ops(int configuration, Matrix& p_early, Matrix& p_late) {
  const double r = 1.0 / std::sqrt(2.0);
  if (configuration == 1) {
    p_early = r * (sigma_z() + sigma_x());
    p_late = r * (sigma_z() - sigma_x());
  } else {
    p_early = r * (-sigma_z() + sigma_x());
    p_late = r * (sigma_z() + sigma_x());
  }
}

} // namespace

SinglePointerExpectations single_pointer_expectations(const ProtocolRun& run) {
  Matrix pe, pl;
  SinglePointerExpectations out;
  single_pointer_ops(1, pe, pl);
  out.e1 = single_pointer_readout(run, pe, pl);
  single_pointer_ops(2, pe, pl);
  out.e2 = single_pointer_readout(run, pe, pl);
  return out;
}

double single_pointer_sample_mean(const ProtocolRun& run, int configuration, long long n,
                                  std::uint64_t seed) {
  if (n < 1) throw_error(ErrorCode::InvalidArgument, "trial count must be >= 1");
  if (configuration != 1 && configuration != 2)
    throw_error(ErrorCode::InvalidArgument, "single-pointer configuration must be 1 or 2");
  Matrix pe, pl;
  single_pointer_ops(configuration, pe, pl);
  const double e = single_pointer_readout(run, pe, pl);
  const double p_plus = 0.5 * (1.0 + e);
  long long sum = 0;
  for (long long t = 0; t < n; ++t)
    sum += (uniform01(seed, static_cast<std::uint64_t>(t)) < p_plus) ? 1 : -1;
  return static_cast<double>(sum) / static_cast<double>(n);
}

} // namespace tct
