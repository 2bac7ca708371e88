#pragma once

#include "tct/operators.hpp"

#include <cstdint>
#include <vector>

namespace tct {

// CPTP map in Kraus form, rho -> sum_mu K_mu rho K_mu^dagger.
// completeness_defect = ||sum K^dagger K - I|| (operator norm). Ground-truth
// channels are validated against tol::completeness; reconstructed ones pass
// their measured defect through `max_defect`.
class KrausChannel {
public:
  KrausChannel(std::vector<Operator> operators, double max_defect = tol::completeness);

  int dim() const { return operators_[0].dim(); }
  const std::vector<Operator>& operators() const { return operators_; }
  double completeness_defect() const { return completeness_defect_; }

  static KrausChannel identity(int dim);
  // K = {sqrt(1-p/2) I, sqrt(p/2) sigma_z}: Bloch x,y shrink by (1-p).
  static KrausChannel phase_damping(double p);
  static KrausChannel amplitude_damping(double gamma);
  // Bloch vector shrinks isotropically by (1-p).
  static KrausChannel depolarizing(double p);
  static KrausChannel unitary(Matrix u);
  // Haar unitary on system x environment (environment dim = system dim),
  // environment traced out. Always a valid CPTP map.
  static KrausChannel random(int dim, std::uint64_t seed);

private:
  std::vector<Operator> operators_;
  double completeness_defect_ = 0.0;
};

// Schroedinger picture: rho' = sum K rho K^dagger.
DensityState apply_channel(const KrausChannel& ch, const DensityState& rho);

// Heisenberg picture: O(t) = sum K^dagger O K.
Operator heisenberg_apply(const KrausChannel& ch, const Operator& obs);

// True iff heisenberg_apply(ch, .) is the identity map on a matrix basis.
bool is_identity_channel(const KrausChannel& ch, double tolerance = 1e-10);

} // namespace tct
