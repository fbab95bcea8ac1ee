#ifndef BMFRENET_ASSOC_CURVES_HPP
#define BMFRENET_ASSOC_CURVES_HPP

#include <optional>
#include <vector>

#include "bmfrenet/null_frenet.hpp"

namespace bmfrenet {

enum class TildeCharacter { Spacelike, Timelike };
const char* to_string(TildeCharacter c);

enum class HelixClass {
  Geodesic,
  PseudoCircle,
  Helix,
  ProperHelix,
  GeneralizedHelix,
  None
};
const char* to_string(HelixClass c);

/// Causal character of the curve under the associated metric. Supports the
/// two analysed families: Legendre (a = 0, b != 0) and b = 0 with a != 0.
TildeCharacter tilde_character(const SlantParams& p, const AcbmStructure& s);

/// ds~/dt: sqrt(|b|) in the Legendre case, |a| in the b = 0 case.
double arclength_factor(const SlantParams& p);

/// max norm of tilde_nabla_{C'} C' for a Legendre curve; vanishes
/// identically, so this is a pure residual.
double legendre_tilde_geodesic_residual(const SlantParams& p,
                                        const LieModel& model);

/// Orthonormal Frenet apparatus under the associated metric.
struct TildeApparatus {
  int order;  // 1 (geodesic) or 3
  FrameVector e1;
  std::optional<FrameVector> e2;
  std::optional<FrameVector> e3;
  double k_tilde;
  double tau_tilde;
  int eps1;
  int eps2;  // 0 below order 2
  int eps3;  // 0 below order 3
};

/// Order-3 apparatus of a non-Legendre curve with b = 0:
/// E1 = C'/|a|-normalized tangent, E2 = sign(theta_xi)(phi C'/a - xi),
/// E3 = (phi C' - C')/|a|, k~ = tau~ = |theta_xi|/2, signs (1,1,-1).
/// Degenerates to order 1 when theta_xi = 0.
TildeApparatus tilde_frenet_order3(const SlantParams& p, const LieModel& model);

struct TildeFrenetResiduals {
  double e1_eq;  // tilde_nabla_{C'} E1 - k~ E2
  double e2_eq;  // tilde_nabla_{C'} E2 + k~ E1 + tau~ E3
  double e3_eq;  // tilde_nabla_{C'} E3 + tau~ E2
  double max_residual() const;
};

TildeFrenetResiduals tilde_frenet_residuals(const TildeApparatus& apparatus,
                                            const SlantParams& p,
                                            const LieModel& model,
                                            const std::vector<double>& t_samples);

/// Applies the curvature/torsion taxonomy to sampled k and tau, with
/// constancy judged by max deviation below tol.
HelixClass classify_helix(const std::vector<double>& k_samples,
                          const std::vector<double>& tau_samples,
                          double tol = 1e-9);

}  // namespace bmfrenet

#endif
