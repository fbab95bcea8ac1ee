#include "bmfrenet/assoc_curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmfrenet {

namespace {

enum class CurveType { Legendre, NonLegendreB0 };

CurveType curve_type(const SlantParams& p) {
  if (p.a() == 0.0) return CurveType::Legendre;
  if (p.b() == 0.0) return CurveType::NonLegendreB0;
  throw UnsupportedCurveTypeError(
      "associated-metric analysis covers only the families a = 0 or b = 0; "
      "got a != 0 and b != 0");
}

}  // namespace

const char* to_string(TildeCharacter c) {
  return c == TildeCharacter::Spacelike ? "spacelike" : "timelike";
}

const char* to_string(HelixClass c) {
  switch (c) {
    case HelixClass::Geodesic: return "geodesic";
    case HelixClass::PseudoCircle: return "pseudo_circle";
    case HelixClass::Helix: return "helix";
    case HelixClass::ProperHelix: return "proper_helix";
    case HelixClass::GeneralizedHelix: return "generalized_helix";
    case HelixClass::None: return "none";
  }
  return "unknown";
}

TildeCharacter tilde_character(const SlantParams& p, const AcbmStructure& /*s*/) {
  // g~(C',C') = b + a^2: equal to b in the Legendre case and a^2 > 0 otherwise.
  if (curve_type(p) == CurveType::Legendre) {
    return p.b() > 0.0 ? TildeCharacter::Spacelike : TildeCharacter::Timelike;
  }
  return TildeCharacter::Spacelike;
}

double arclength_factor(const SlantParams& p) {
  if (curve_type(p) == CurveType::Legendre) {
    return std::sqrt(std::abs(p.b()));
  }
  return std::abs(p.a());
}

double legendre_tilde_geodesic_residual(const SlantParams& p,
                                        const LieModel& model) {
  if (curve_type(p) != CurveType::Legendre) {
    throw UnsupportedCurveTypeError(
        "tilde-geodesic residual is defined for Legendre curves (a = 0)");
  }
  const FrameVector unit_tangent = build_tangent(p) / arclength_factor(p);
  return model.tilde_nabla(unit_tangent, unit_tangent).cwiseAbs().maxCoeff();
}

TildeApparatus tilde_frenet_order3(const SlantParams& p, const LieModel& model) {
  if (curve_type(p) != CurveType::NonLegendreB0) {
    throw UnsupportedCurveTypeError(
        "order-3 apparatus is defined for non-Legendre curves with b = 0");
  }
  const AcbmStructure& s = model.structure();
  const double a = p.a();
  const double abs_a = std::abs(a);
  const FrameVector tangent = build_tangent(p);
  const FrameVector phi_tangent = s.apply_phi(tangent);

  TildeApparatus app{};
  app.e1 = tangent / abs_a;
  app.eps1 = 1;

  const double theta = model.theta_xi();
  if (theta == 0.0) {
    // Geodesic branch: the apparatus stops at the unit tangent.
    app.order = 1;
    app.k_tilde = 0.0;
    app.tau_tilde = 0.0;
    app.eps2 = 0;
    app.eps3 = 0;
    return app;
  }

  const double eps_tilde = theta > 0.0 ? 1.0 : -1.0;
  app.order = 3;
  app.e2 = eps_tilde * (phi_tangent / a - s.xi);
  app.e3 = (phi_tangent - tangent) / abs_a;
  app.k_tilde = 0.5 * std::abs(theta);
  app.tau_tilde = app.k_tilde;
  app.eps2 = 1;
  app.eps3 = -1;
  return app;
}

double TildeFrenetResiduals::max_residual() const {
  return std::max({e1_eq, e2_eq, e3_eq});
}

TildeFrenetResiduals tilde_frenet_residuals(
    const TildeApparatus& apparatus, const SlantParams& p, const LieModel& model,
    const std::vector<double>& t_samples) {
  if (apparatus.order != 3 || !apparatus.e2 || !apparatus.e3) {
    throw UnsupportedCurveTypeError(
        "Frenet residuals require an order-3 apparatus");
  }
  const FrameVector unit_tangent = build_tangent(p) / arclength_factor(p);
  const CurveVectorField f1 = CurveVectorField::constant(apparatus.e1);
  const CurveVectorField f2 = CurveVectorField::constant(*apparatus.e2);
  const CurveVectorField f3 = CurveVectorField::constant(*apparatus.e3);

  TildeFrenetResiduals res{0.0, 0.0, 0.0};
  for (const double t : t_samples) {
    const FrameVector d1 = model.tilde_nabla_along(unit_tangent, f1, t);
    const FrameVector d2 = model.tilde_nabla_along(unit_tangent, f2, t);
    const FrameVector d3 = model.tilde_nabla_along(unit_tangent, f3, t);
    res.e1_eq = std::max(
        res.e1_eq, (d1 - apparatus.k_tilde * *apparatus.e2).cwiseAbs().maxCoeff());
    res.e2_eq = std::max(
        res.e2_eq, (d2 + apparatus.k_tilde * apparatus.e1 +
                    apparatus.tau_tilde * *apparatus.e3)
                       .cwiseAbs()
                       .maxCoeff());
    res.e3_eq = std::max(
        res.e3_eq,
        (d3 + apparatus.tau_tilde * *apparatus.e2).cwiseAbs().maxCoeff());
  }
  return res;
}

HelixClass classify_helix(const std::vector<double>& k_samples,
                          const std::vector<double>& tau_samples, double tol) {
  if (k_samples.empty() || k_samples.size() != tau_samples.size()) {
    throw std::invalid_argument("k and tau samples must be nonempty and aligned");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }

  const auto [k_min, k_max] = std::minmax_element(k_samples.begin(), k_samples.end());
  const auto [tau_min, tau_max] =
      std::minmax_element(tau_samples.begin(), tau_samples.end());

  const bool k_zero =
      std::all_of(k_samples.begin(), k_samples.end(),
                  [tol](double k) { return std::abs(k) < tol; });
  if (k_zero) return HelixClass::Geodesic;

  const bool k_const = (*k_max - *k_min) < tol;
  const bool tau_const = (*tau_max - *tau_min) < tol;
  const bool tau_zero =
      std::all_of(tau_samples.begin(), tau_samples.end(),
                  [tol](double t) { return std::abs(t) < tol; });

  if (k_const && tau_zero) return HelixClass::PseudoCircle;
  // Constant k and tau with tau != 0 is a helix that is not a circle.
  if (k_const && tau_const) return HelixClass::ProperHelix;

  if (!tau_zero) {
    bool ratio_defined = true;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    for (std::size_t i = 0; i < k_samples.size(); ++i) {
      if (std::abs(tau_samples[i]) < tol) {
        ratio_defined = false;
        break;
      }
      const double r = k_samples[i] / tau_samples[i];
      if (i == 0) {
        ratio_min = ratio_max = r;
      } else {
        ratio_min = std::min(ratio_min, r);
        ratio_max = std::max(ratio_max, r);
      }
    }
    if (ratio_defined && (ratio_max - ratio_min) < tol && !(k_const && tau_const)) {
      return HelixClass::GeneralizedHelix;
    }
  }
  return HelixClass::None;
}

}  // namespace bmfrenet
