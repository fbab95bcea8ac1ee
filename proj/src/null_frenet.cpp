#include "bmfrenet/null_frenet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmfrenet {

SlantParams::SlantParams(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("slant constants must be finite");
  }
  if (a == 0.0 && b == 0.0) {
    throw DegenerateSlantError();
  }
}

double SlantParams::discriminant() const {
  return (a_ * a_) * (a_ * a_) + b_ * b_;
}

double SlantParams::sqrt_discriminant() const {
  return std::sqrt(discriminant());
}

FrameVector build_tangent(const SlantParams& p) {
  const double a2 = p.a() * p.a();
  const double sq = p.sqrt_discriminant();
  // sqrt(D) >= a^2; clamp the 1-ulp negative that rounding can produce at b=0.
  const double comp1 = std::max(0.0, 0.5 * (sq - a2));
  const double comp2 = 0.5 * (sq + a2);
  return FrameVector(-p.eps() * std::sqrt(comp1), std::sqrt(comp2), p.a());
}

SlantInvariants slant_invariants(const FrameVector& tangent,
                                 const AcbmStructure& s) {
  return SlantInvariants{
      inner(s.g, tangent, s.xi),
      inner(s.g, tangent, s.apply_phi(tangent)),
      std::abs(inner(s.g, tangent, tangent))};
}

FramePair frame_family(const SlantParams& p, const LieModel& model, double beta) {
  const AcbmStructure& s = model.structure();
  const FrameVector tangent = build_tangent(p);
  const FrameVector phi_tangent = s.apply_phi(tangent);
  const double a = p.a();
  const double b = p.b();
  const double d = p.discriminant();
  const double sq = p.sqrt_discriminant();

  const double w_xi = -b / sq;
  const double w_phi = a / sq;
  const double n_xi = (a * a * a + beta * b * sq) / d;
  const double n_tan = -(a * a + beta * beta * d) / (2.0 * d);
  const double n_phi = (b - beta * a * sq) / d;

  return FramePair{
      w_xi * s.xi + beta * tangent + w_phi * phi_tangent,
      n_xi * s.xi + n_tan * tangent + n_phi * phi_tangent};
}

CurvaturePair h_and_k1(const SlantParams& p, const LieModel& model, double beta) {
  const double k1 = 0.5 * model.theta_xi() * p.sqrt_discriminant();
  return CurvaturePair{-beta * k1, k1};
}

NullFrenetFrame unique_frame_f1(const SlantParams& p, const LieModel& model) {
  const FramePair pair = frame_family(p, model, 0.0);
  const double a2 = p.a() * p.a();
  const double k1 = 0.5 * model.theta_xi() * p.sqrt_discriminant();
  const double k2 = 0.25 * a2 * model.theta_xi() / p.sqrt_discriminant();
  return NullFrenetFrame{build_tangent(p), pair.n, pair.w, 0.0, k1, k2, 0.0};
}

double FrenetResiduals::max_residual() const {
  return std::max({tangent_eq, normal_eq, screen_eq});
}

FrenetResiduals frenet_residuals(const NullFrenetFrame& frame,
                                 const LieModel& model,
                                 const std::vector<double>& t_samples) {
  const CurveVectorField tangent_field = CurveVectorField::constant(frame.tangent);
  const CurveVectorField n_field = CurveVectorField::constant(frame.n);
  const CurveVectorField w_field = CurveVectorField::constant(frame.w);

  FrenetResiduals res{0.0, 0.0, 0.0};
  for (const double t : t_samples) {
    const FrameVector dc = model.nabla_along(frame.tangent, tangent_field, t);
    const FrameVector dn = model.nabla_along(frame.tangent, n_field, t);
    const FrameVector dw = model.nabla_along(frame.tangent, w_field, t);
    res.tangent_eq = std::max(
        res.tangent_eq, (dc - frame.k1 * frame.w).cwiseAbs().maxCoeff());
    res.normal_eq = std::max(
        res.normal_eq, (dn - frame.k2 * frame.w).cwiseAbs().maxCoeff());
    res.screen_eq = std::max(
        res.screen_eq,
        (dw + frame.k2 * frame.tangent + frame.k1 * frame.n).cwiseAbs().maxCoeff());
  }
  return res;
}

NullCurveFlags classify_null_curve(const SlantParams& p, const LieModel& model) {
  const double theta = model.theta_xi();
  NullCurveFlags flags{};
  flags.geodesic = (theta == 0.0);
  flags.legendre = (p.a() == 0.0);
  // k2 = a^2 theta(xi) / (4 sqrt(D)) vanishes exactly in these two cases.
  flags.generalized_null_cubic = flags.legendre || flags.geodesic;
  // nabla_C C = phi C needs the phi C coefficient a theta(xi)/2 to be one
  // and the xi coefficient -b theta(xi)/2 to vanish.
  flags.phi_geodesic = (p.b() == 0.0) && (p.a() * theta == 2.0);
  return flags;
}

SlantParams reparam_behavior(const SlantParams& p, double /*c0*/, double c1) {
  if (c1 == 0.0) {
    throw InvalidReparamError();
  }
  return SlantParams(c1 * p.a(), c1 * c1 * p.b());
}

}  // namespace bmfrenet
