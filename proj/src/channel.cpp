#include "tct/channel.hpp"

#include "tct/rng.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace tct {

namespace {

Matrix completeness_sum(const std::vector<Operator>& ops) {
  const int d = ops[0].dim();
  Matrix s = Matrix::Zero(d, d);
  for (const auto& k : ops) s += k.matrix().adjoint() * k.matrix();
  return s;
}

} // namespace

KrausChannel::KrausChannel(std::vector<Operator> operators, double max_defect)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw_error(ErrorCode::InvalidArgument, "channel needs Kraus operators");
  const int d = operators_[0].dim();
  for (const auto& k : operators_)
    if (k.dim() != d) throw_error(ErrorCode::DimensionMismatch, "Kraus operator dimension mismatch");
  const Matrix defect = completeness_sum(operators_) - Matrix::Identity(d, d);
  completeness_defect_ = Operator(defect).norm();
  if (completeness_defect_ > max_defect)
    throw_error(ErrorCode::InvalidArgument,
                "Kraus set not trace preserving (defect " + std::to_string(completeness_defect_) + ")");
}

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel({Operator(Matrix::Identity(dim, dim))});
}

KrausChannel KrausChannel::phase_damping(double p) {
  if (p < 0 || p > 1) throw_error(ErrorCode::InvalidArgument, "phase damping needs p in [0,1]");
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1;
  return KrausChannel({Operator(std::sqrt(1 - p / 2) * Matrix::Identity(2, 2)),
                       Operator(std::sqrt(p / 2) * z)});
}

KrausChannel KrausChannel::amplitude_damping(double gamma) {
  if (gamma < 0 || gamma > 1) throw_error(ErrorCode::InvalidArgument, "amplitude damping needs gamma in [0,1]");
  Matrix k0 = Matrix::Identity(2, 2);
  k0(1, 1) = std::sqrt(1 - gamma);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel({Operator(std::move(k0)), Operator(std::move(k1))});
}

KrausChannel KrausChannel::depolarizing(double p) {
  if (p < 0 || p > 4.0 / 3.0) throw_error(ErrorCode::InvalidArgument, "depolarizing needs p in [0,4/3]");
  Matrix x = Matrix::Zero(2, 2), y = Matrix::Zero(2, 2), z = Matrix::Identity(2, 2);
  x(0, 1) = x(1, 0) = 1;
  y(0, 1) = Complex(0, -1);
  y(1, 0) = Complex(0, 1);
  z(1, 1) = -1;
  const double q = p / 4;
  return KrausChannel({Operator(std::sqrt(1 - 3 * q) * Matrix::Identity(2, 2)),
                       Operator(std::sqrt(q) * x), Operator(std::sqrt(q) * y),
                       Operator(std::sqrt(q) * z)});
}

KrausChannel KrausChannel::unitary(Matrix u) {
  const int d = static_cast<int>(u.rows());
  if ((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw_error(ErrorCode::InvalidArgument, "matrix is not unitary");
  return KrausChannel({Operator(std::move(u))});
}

KrausChannel KrausChannel::random(int dim, std::uint64_t seed) {
  const Matrix u = random_unitary(dim * dim, derive_seed(seed, stream::generator, 11));
  // initial environment state |0>, Kraus blocks K_e[i,j] = U[(i,e),(j,0)]
  std::vector<Operator> ks;
  ks.reserve(static_cast<std::size_t>(dim));
  for (int e = 0; e < dim; ++e) {
    Matrix k(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) k(i, j) = u(i * dim + e, j * dim + 0);
    ks.push_back(Operator(std::move(k)));
  }
  return KrausChannel(std::move(ks));
}

DensityState apply_channel(const KrausChannel& ch, const DensityState& rho) {
  if (ch.dim() != rho.dim()) throw_error(ErrorCode::DimensionMismatch, "channel/state dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : ch.operators()) out += k.matrix() * rho.matrix() * k.matrix().adjoint();
  return DensityState(0.5 * (out + out.adjoint()));
}

Operator heisenberg_apply(const KrausChannel& ch, const Operator& obs) {
  if (ch.dim() != obs.dim()) throw_error(ErrorCode::DimensionMismatch, "channel/observable dimension mismatch");
  if (!obs.is_hermitian()) throw_error(ErrorCode::InvalidArgument, "observable must be Hermitian");
  Matrix out = Matrix::Zero(obs.dim(), obs.dim());
  for (const auto& k : ch.operators()) out += k.matrix().adjoint() * obs.matrix() * k.matrix();
  return Operator(0.5 * (out + out.adjoint()));
}

bool is_identity_channel(const KrausChannel& ch, double tolerance) {
  const int d = ch.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1;
      Matrix out = Matrix::Zero(d, d);
      for (const auto& k : ch.operators()) out += k.matrix() * e * k.matrix().adjoint();
      if ((out - e).cwiseAbs().maxCoeff() > tolerance) return false;
    }
  return true;
}

} // namespace tct
