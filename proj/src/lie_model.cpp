#include "bmfrenet/lie_model.hpp"

#include <cmath>
#include <stdexcept>

namespace bmfrenet {

FrameVector CurveVectorField::value(double t) const {
  return FrameVector(coeffs[0](t), coeffs[1](t), coeffs[2](t));
}

FrameVector CurveVectorField::derivative(double t) const {
  return FrameVector(dcoeffs[0](t), dcoeffs[1](t), dcoeffs[2](t));
}

CurveVectorField CurveVectorField::constant(const FrameVector& v) {
  CurveVectorField field;
  for (int i = 0; i < 3; ++i) {
    const double c = v(i);
    field.coeffs[i] = [c](double) { return c; };
    field.dcoeffs[i] = [](double) { return 0.0; };
  }
  return field;
}

double CurveVectorField::consistency_residual(
    const std::vector<double>& t_samples, double step) const {
  double worst = 0.0;
  for (const double t : t_samples) {
    for (int i = 0; i < 3; ++i) {
      const double central = (coeffs[i](t + step) - coeffs[i](t - step)) / (2.0 * step);
      worst = std::max(worst, std::abs(central - dcoeffs[i](t)));
    }
  }
  return worst;
}

ConnectionTable koszul_connection(
    const std::function<FrameVector(const FrameVector&, const FrameVector&)>& bracket,
    const MetricTensor& g) {
  Eigen::FullPivLU<Matrix3> lu(g.components());
  if (!lu.isInvertible()) {
    throw NondegeneracyError("Koszul system requires a nondegenerate metric");
  }
  ConnectionTable table;
  for (int i = 0; i < 3; ++i) {
    const FrameVector ei = basis_vector(i);
    for (int j = 0; j < 3; ++j) {
      const FrameVector ej = basis_vector(j);
      FrameVector rhs;
      for (int k = 0; k < 3; ++k) {
        const FrameVector ek = basis_vector(k);
        rhs(k) = 0.5 * (inner(g, bracket(ei, ej), ek) +
                        inner(g, bracket(ek, ei), ej) +
                        inner(g, bracket(ek, ej), ei));
      }
      table[i][j] = lu.solve(rhs);
    }
  }
  return table;
}

namespace {
double checked_alpha(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite");
  }
  return alpha;
}
}  // namespace

LieModel::LieModel(double alpha)
    : alpha_(checked_alpha(alpha)),
      structure_(lie_group_model_structure()),
      assoc_(assoc_metric(structure_)),
      connection_(koszul_connection(
          [this](const FrameVector& x, const FrameVector& y) {
            return bracket(x, y);
          },
          structure_.g)) {
  // The Lee form computed from the derived connection must report
  // theta(xi) = 2 alpha; anything else means a broken derivation.
  const LeeForms lee = lee_forms(f_table_from_nabla(connection_, structure_), structure_);
  if (std::abs(lee.theta.dot(structure_.xi) - theta_xi()) >
      1e-12 * std::max(1.0, std::abs(alpha))) {
    throw std::logic_error("Lee form inconsistent with the structure constant");
  }
}

FrameVector LieModel::bracket(const FrameVector& x, const FrameVector& y) const {
  // Bilinear antisymmetric extension of
  // [E1,E3] = alpha E2, [E2,E3] = -alpha E1, [E1,E2] = 0.
  const double c13 = x(0) * y(2) - x(2) * y(0);
  const double c23 = x(1) * y(2) - x(2) * y(1);
  return FrameVector(-alpha_ * c23, alpha_ * c13, 0.0);
}

FrameVector LieModel::nabla(const FrameVector& x, const FrameVector& y) const {
  FrameVector out = FrameVector::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out += x(i) * y(j) * connection_[i][j];
    }
  }
  return out;
}

FrameVector LieModel::nabla_along(const FrameVector& tangent,
                                  const CurveVectorField& v, double t) const {
  return v.derivative(t) + nabla(tangent, v.value(t));
}

FrameVector LieModel::tilde_nabla(const FrameVector& x, const FrameVector& y) const {
  const FrameVector py = structure_.apply_phi(y);
  const double factor =
      alpha_ * (inner(structure_.g, x, py) -
                inner(structure_.g, structure_.apply_phi(x), py));
  return nabla(x, y) + factor * structure_.xi;
}

FrameVector LieModel::tilde_nabla_along(const FrameVector& tangent,
                                        const CurveVectorField& v, double t) const {
  return v.derivative(t) + tilde_nabla(tangent, v.value(t));
}

double LieModel::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const FrameVector ei = basis_vector(i);
        const FrameVector ej = basis_vector(j);
        const FrameVector ek = basis_vector(k);
        const FrameVector cyc = bracket(bracket(ei, ej), ek) +
                                bracket(bracket(ej, ek), ei) +
                                bracket(bracket(ek, ei), ej);
        worst = std::max(worst, cyc.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

double LieModel::antisymmetry_residual() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const FrameVector ei = basis_vector(i);
      const FrameVector ej = basis_vector(j);
      worst = std::max(worst, (bracket(ei, ej) + bracket(ej, ei)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace bmfrenet
