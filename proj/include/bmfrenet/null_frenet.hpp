#ifndef BMFRENET_NULL_FRENET_HPP
#define BMFRENET_NULL_FRENET_HPP

#include <vector>

#include "bmfrenet/lie_model.hpp"

namespace bmfrenet {

/// Slant constants of a phi-slant null curve: a = eta(C'), b = g(C', phi C').
/// The pair (0,0) admits no null curve and is rejected at construction.
class SlantParams {
public:
  SlantParams(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }

  /// sign of b, +1 at b = 0 (the choice is unobservable there).
  double eps() const { return b_ < 0.0 ? -1.0 : 1.0; }

  double discriminant() const;       // a^4 + b^2
  double sqrt_discriminant() const;

private:
  double a_;
  double b_;
};

/// The distinguished frame {C', N, W} together with its scalar data.
/// In the Lie-group model all frame coefficients are t-independent.
struct NullFrenetFrame {
  FrameVector tangent;
  FrameVector n;
  FrameVector w;
  double h;
  double k1;
  double k2;
  double beta;
};

/// Tangent components (p, q, a) with p = -eps sqrt((sqrt(D)-a^2)/2),
/// q = sqrt((sqrt(D)+a^2)/2); null with eta = a and g(C',phi C') = b.
FrameVector build_tangent(const SlantParams& p);

struct SlantInvariants {
  double a;
  double b;
  double null_residual;
};

/// Inverse of build_tangent on its image: reads (a, b, |g(C',C')|) off a
/// candidate tangent.
SlantInvariants slant_invariants(const FrameVector& tangent,
                                 const AcbmStructure& s);

struct FramePair {
  FrameVector w;
  FrameVector n;
};

/// General screen frame W = -(b/sqrt(D)) xi + beta C' + (a/sqrt(D)) phi C'
/// and its unique null transversal N, for an arbitrary screen parameter beta.
FramePair frame_family(const SlantParams& p, const LieModel& model, double beta);

struct CurvaturePair {
  double h;
  double k1;
};

/// Closed forms h = -beta theta(xi) sqrt(D)/2 and k1 = theta(xi) sqrt(D)/2.
CurvaturePair h_and_k1(const SlantParams& p, const LieModel& model, double beta);

/// The unique frame with h = 0 for the original parameter (beta = 0),
/// with k2 = a^2 theta(xi) / (4 sqrt(D)).
NullFrenetFrame unique_frame_f1(const SlantParams& p, const LieModel& model);

struct FrenetResiduals {
  double tangent_eq;  // nabla_C C  - k1 W
  double normal_eq;   // nabla_C N  - k2 W
  double screen_eq;   // nabla_C W  + k2 C + k1 N
  double max_residual() const;
};

/// Max-norm residuals of the three Frenet equations over the samples.
FrenetResiduals frenet_residuals(const NullFrenetFrame& frame,
                                 const LieModel& model,
                                 const std::vector<double>& t_samples);

struct NullCurveFlags {
  bool geodesic;
  bool generalized_null_cubic;
  bool phi_geodesic;
  bool legendre;
};

/// Exact parameter-condition classification (inputs are exact constants).
NullCurveFlags classify_null_curve(const SlantParams& p, const LieModel& model);

/// Slant constants after the affine change t = c1 p + c0.
SlantParams reparam_behavior(const SlantParams& p, double c0, double c1);

}  // namespace bmfrenet

#endif
