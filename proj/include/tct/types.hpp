#pragma once

#include <Eigen/Dense>
#include <complex>

namespace tct {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Central numerical tolerances. Spec'd defaults; per-call overrides exist
// where a contract says "configurable".
namespace tol {
inline constexpr double hermiticity = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd = 1e-12;          // eigenvalues >= -psd
inline constexpr double singularity = 1e-10;  // state singularity threshold
inline constexpr double structure = 1e-10;    // f/g reconstruction
inline constexpr double completeness = 1e-10; // ground-truth Kraus sets
inline constexpr double invertibility = 1e-8; // covariance, exact mode
inline constexpr double clamp_exact = 1e-8;   // gram eigenvalue clamp, exact mode
} // namespace tol

} // namespace tct
