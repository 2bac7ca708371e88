#pragma once

#include "tct/covariance.hpp"

#include <optional>

namespace tct {

// Heisenberg-picture affine dynamics over the traceless basis:
// B_i(t) = M_ij B_j(t0) + chi_i * Identity. chi is the scalar offset, the
// quantity recovered from mean vectors (the B_0 coefficient is sqrt(D)*chi).
struct AffineDynamics {
  RealMatrix m;
  RealVector chi;
};

// Hermitian matrix U_ab = sum_mu u*_{a mu} u_{b mu} of Kraus coefficients in
// the operator basis; its eigensystem yields the Kraus operators.
struct GramMatrix {
  Matrix u;
  RealVector eigenvalues; // descending
  Matrix eigenvectors;    // columns, matching order, of u transposed (see kraus_from_gram)
  double solve_residual = 0.0;
};

// True iff the smallest singular value of the (equal-time) covariance is
// above `tolerance`. Singular covariance <=> singular state.
bool check_invertibility(const TemporalCovariance& cov, double tolerance = tol::invertibility);

// M = sigma(t,t0) sigma(t0,t0)^{-1} through a linear solve. Throws
// ErrorCode::SingularState when the equal-time covariance is singular, in
// which case the state does not sample the full space and the evolution
// cannot be identified.
RealMatrix recover_m(const TemporalCovariance& cov_t, const TemporalCovariance& cov_0,
                     double tolerance = tol::invertibility);

RealVector recover_chi(const RealMatrix& m, const RealVector& mean_early,
                       const RealVector& mean_late);

// Exactly determined real linear system (size D^4) mapping the Hermitian
// Gram unknowns to M, chi and the trace-preservation constraints. For D = 2
// the closed-form solution is used; the general solver remains available for
// any D (and cross-checks the closed form in tests).
GramMatrix solve_gram(const AffineDynamics& dyn, const OperatorBasis& basis,
                      const StructureTensors& tensors);
GramMatrix solve_gram_general(const AffineDynamics& dyn, const OperatorBasis& basis,
                              const StructureTensors& tensors);
GramMatrix solve_gram_qubit(const AffineDynamics& dyn);

// Eigen-route Kraus extraction. Eigenvalues in [-clamp_tol, clamp_tol] are
// treated as zero; an eigenvalue below -clamp_tol raises
// ErrorCode::NotCompletelyPositive carrying the offending value.
KrausChannel kraus_from_gram(const GramMatrix& gram, const OperatorBasis& basis,
                             double clamp_tol = tol::clamp_exact);

struct ReconstructionDiagnostics {
  double delta_m_spectral = 0.0;
  double delta_m_max_entry = 0.0;
  double completeness_defect = 0.0;
  double gram_min_eigenvalue = 0.0;
  double gram_solve_residual = 0.0;
  double sigma0_min_singular_value = 0.0;
  long long correlation_experiments = 0;
  long long mean_experiments = 0;
  long long total_measurements = 0;
};

struct Reconstruction {
  AffineDynamics dynamics;
  KrausChannel kraus;
  ReconstructionDiagnostics diagnostics;
};

enum class EstimationMode { Exact, TwoPointer, SinglePointer };

// End-to-end pipeline: covariances -> M -> chi -> Gram -> Kraus.
// `budget`/`seed` are ignored in exact mode.
Reconstruction reconstruct_channel(const DensityState& state, const KrausChannel& truth,
                                   const OperatorBasis& basis, EstimationMode mode,
                                   const Budget& budget = {}, std::uint64_t seed = 0);

// Heisenberg-truth dynamics of a channel over a basis (oracle for tests and
// delta-M diagnostics).
AffineDynamics true_dynamics(const KrausChannel& channel, const OperatorBasis& basis);

} // namespace tct
