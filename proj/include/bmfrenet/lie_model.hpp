#ifndef BMFRENET_LIE_MODEL_HPP
#define BMFRENET_LIE_MODEL_HPP

#include <array>
#include <functional>
#include <vector>

#include "bmfrenet/structure.hpp"

namespace bmfrenet {

/// Vector field along a curve with frame coefficients v^i(t) and their exact
/// derivatives. Finite differences are used only to spot-check consistency.
struct CurveVectorField {
  std::array<std::function<double(double)>, 3> coeffs;
  std::array<std::function<double(double)>, 3> dcoeffs;

  FrameVector value(double t) const;
  FrameVector derivative(double t) const;

  static CurveVectorField constant(const FrameVector& v);

  /// max over samples and components of |central difference - dcoeffs|.
  double consistency_residual(const std::vector<double>& t_samples,
                              double step = 1e-5) const;
};

/// Solves 2 g(nabla_{E_i} E_j, E_k) = g([E_i,E_j],E_k) + g([E_k,E_i],E_j)
/// + g([E_k,E_j],E_i) for each basis pair.
ConnectionTable koszul_connection(
    const std::function<FrameVector(const FrameVector&, const FrameVector&)>& bracket,
    const MetricTensor& g);

/// The 3-dimensional Lie group with [E1,E3] = alpha E2, [E2,E3] = -alpha E1,
/// [E1,E2] = 0, carrying the model almost contact B-metric structure.
/// alpha = 0 degenerates to the cosymplectic case (all brackets vanish).
class LieModel {
public:
  explicit LieModel(double alpha);

  double alpha() const { return alpha_; }
  double theta_xi() const { return 2.0 * alpha_; }
  bool is_f0() const { return alpha_ == 0.0; }

  const AcbmStructure& structure() const { return structure_; }
  const MetricTensor& metric() const { return structure_.g; }
  const MetricTensor& assoc() const { return assoc_; }
  const ConnectionTable& connection() const { return connection_; }

  FrameVector bracket(const FrameVector& x, const FrameVector& y) const;

  /// Levi-Civita connection of g on constant-coefficient fields.
  FrameVector nabla(const FrameVector& x, const FrameVector& y) const;

  /// Covariant derivative of a field with t-dependent coefficients:
  /// dv^i/dt E_i + v^i nabla_tangent E_i.
  FrameVector nabla_along(const FrameVector& tangent, const CurveVectorField& v,
                          double t) const;

  /// Levi-Civita connection of the associated metric:
  /// tilde_nabla_X Y = nabla_X Y + (theta_xi/2){g(X,phi Y) - g(phi X,phi Y)} xi.
  FrameVector tilde_nabla(const FrameVector& x, const FrameVector& y) const;

  FrameVector tilde_nabla_along(const FrameVector& tangent,
                                const CurveVectorField& v, double t) const;

  /// max norm of the cyclic bracket sum over all basis triples.
  double jacobi_residual() const;

  /// max norm of [X,Y] + [Y,X] over basis pairs.
  double antisymmetry_residual() const;

private:
  double alpha_;
  AcbmStructure structure_;
  MetricTensor assoc_;
  ConnectionTable connection_;
};

}  // namespace bmfrenet

#endif
