#include "tct/operators.hpp"

#include "tct/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace tct {

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw_error(ErrorCode::InvalidArgument, "operator must be a nonempty square matrix");
  hermitian_ = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol::hermiticity;
}

Operator Operator::hermitian(Matrix entries, double tolerance) {
  Operator op(std::move(entries));
  const double defect = (op.entries_ - op.entries_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tolerance)
    throw_error(ErrorCode::InvalidArgument,
                "operator is not Hermitian (defect " + std::to_string(defect) + ")");
  op.hermitian_ = true;
  return op;
}

double Operator::norm() const {
  if (hermitian_) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return entries_.jacobiSvd().singularValues()(0);
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DensityState::DensityState(Matrix rho, double singularity_tol)
    : rho_(std::move(rho)), singularity_tol_(singularity_tol) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1)
    throw_error(ErrorCode::InvalidArgument, "density matrix must be square");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol::hermiticity)
    throw_error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > tol::trace || std::abs(rho_.trace().imag()) > tol::trace)
    throw_error(ErrorCode::InvalidArgument, "density matrix trace must be 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  eigen_floor_ = es.eigenvalues().minCoeff();
  if (eigen_floor_ < -tol::psd)
    throw_error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
}

DensityState DensityState::maximally_mixed(int dim) {
  return DensityState(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityState DensityState::pure(const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd v = psi / psi.norm();
  return DensityState(v * v.adjoint());
}

DensityState DensityState::thermal(const Operator& hamiltonian, double beta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian.matrix());
  Eigen::VectorXd w = (-beta * es.eigenvalues().array()).exp();
  w /= w.sum();
  Matrix rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  return DensityState(0.5 * (rho + rho.adjoint()));
}

DensityState DensityState::random_full_rank(int dim, double min_eigenvalue, std::uint64_t seed) {
  if (min_eigenvalue * dim >= 1.0)
    throw_error(ErrorCode::InvalidArgument, "min_eigenvalue too large for dimension");
  const std::uint64_t s = derive_seed(seed, stream::generator, 1);
  Eigen::VectorXd lam(dim);
  // draws in [dim*min, 1]; dividing by the sum (<= dim) keeps every
  // eigenvalue >= min_eigenvalue
  const double lo = dim * min_eigenvalue;
  for (int i = 0; i < dim; ++i) lam(i) = lo + (1.0 - lo) * uniform01(s, i);
  lam /= lam.sum();
  Matrix q = random_unitary(dim, derive_seed(seed, stream::generator, 2));
  Matrix rho = q * lam.asDiagonal() * q.adjoint();
  return DensityState(0.5 * (rho + rho.adjoint()));
}

DensityState DensityState::random_singular(int dim, int rank, std::uint64_t seed) {
  if (rank < 1 || rank >= dim)
    throw_error(ErrorCode::InvalidArgument, "singular state needs 1 <= rank < dim");
  const std::uint64_t s = derive_seed(seed, stream::generator, 3);
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < rank; ++i) lam(i) = 0.1 + 0.9 * uniform01(s, i);
  lam /= lam.sum();
  Matrix q = random_unitary(dim, derive_seed(seed, stream::generator, 4));
  Matrix rho = q * lam.asDiagonal() * q.adjoint();
  return DensityState(0.5 * (rho + rho.adjoint()));
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double z0, z1;
      normal_pair(seed, static_cast<std::uint64_t>(i) * dim + j, z0, z1);
      g(i, j) = Complex(z0, z1);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

} // namespace tct
