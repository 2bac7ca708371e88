#pragma once

#include "tct/errors.hpp"
#include "tct/types.hpp"

#include <cstdint>

namespace tct {

// Dense complex square matrix with Hermiticity metadata. Immutable after
// construction.
class Operator {
public:
  explicit Operator(Matrix entries);

  // Validates A = A^dagger entrywise within `tolerance` and flags the result.
  static Operator hermitian(Matrix entries, double tolerance = tol::hermiticity);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  bool is_hermitian() const { return hermitian_; }

  // Largest singular value (for Hermitian operators, the largest |eigenvalue|).
  double norm() const;

  Operator adjoint() const { return Operator(entries_.adjoint()); }

private:
  Matrix entries_;
  bool hermitian_ = false;
};

double trace_distance(const Matrix& a, const Matrix& b);

// Density matrix: Hermitian, unit trace, positive semidefinite. The smallest
// eigenvalue is cached at validation time; singular() compares it against the
// singularity tolerance.
class DensityState {
public:
  explicit DensityState(Matrix rho, double singularity_tol = tol::singularity);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }
  double eigen_floor() const { return eigen_floor_; }
  bool singular() const { return eigen_floor_ < singularity_tol_; }

  static DensityState maximally_mixed(int dim);
  static DensityState pure(const Eigen::VectorXcd& psi);
  // exp(-beta H)/Z for Hermitian H.
  static DensityState thermal(const Operator& hamiltonian, double beta);
  // Random full-rank state; every eigenvalue is >= min_eigenvalue after
  // normalization.
  static DensityState random_full_rank(int dim, double min_eigenvalue, std::uint64_t seed);
  // Random state of rank `rank` < dim (singular by construction).
  static DensityState random_singular(int dim, int rank, std::uint64_t seed);

private:
  Matrix rho_;
  double eigen_floor_ = 0.0;
  double singularity_tol_ = tol::singularity;
};

// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
Matrix random_unitary(int dim, std::uint64_t seed);

} // namespace tct
