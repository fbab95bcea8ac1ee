#include "bmfrenet/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace bmfrenet {

FrameVector basis_vector(int i) {
  FrameVector e = FrameVector::Zero();
  e(i) = 1.0;
  return e;
}

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Null: return "null";
    case CausalCharacter::Zero: return "zero";
  }
  return "unknown";
}

MetricTensor::MetricTensor(const Matrix3& components) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = components(i, j);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("metric components must be finite");
      }
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
  if (std::abs(m_.determinant()) <= 1e-12) {
    throw NondegeneracyError("metric is numerically degenerate");
  }
}

MetricTensor MetricTensor::diagonal(double m11, double m22, double m33) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = m11;
  m(1, 1) = m22;
  m(2, 2) = m33;
  return MetricTensor(m);
}

Matrix3 MetricTensor::inverse() const {
  Eigen::FullPivLU<Matrix3> lu(m_);
  if (!lu.isInvertible()) {
    throw NondegeneracyError("metric is numerically degenerate");
  }
  return lu.inverse();
}

std::pair<int, int> MetricTensor::signature(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(m_, Eigen::EigenvaluesOnly);
  int plus = 0;
  int minus = 0;
  for (int i = 0; i < 3; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > tol) ++plus;
    if (ev < -tol) ++minus;
  }
  return {plus, minus};
}

double inner(const MetricTensor& g, const FrameVector& u, const FrameVector& v) {
  return u.dot(g.components() * v);
}

CausalCharacter causal_character(const MetricTensor& g, const FrameVector& v,
                                 double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (v.cwiseAbs().maxCoeff() < tol) {
    return CausalCharacter::Zero;
  }
  const double q = inner(g, v, v);
  if (std::abs(q) < tol) {
    return CausalCharacter::Null;
  }
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

Matrix3 exp_series(const Matrix3& a, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  const double norm = a.cwiseAbs().maxCoeff();
  int squarings = 0;
  Matrix3 scaled = a;
  if (norm > 1.0) {
    squarings = static_cast<int>(std::ceil(std::log2(norm)));
    scaled = a / std::ldexp(1.0, squarings);
  }
  Matrix3 sum = Matrix3::Identity();
  Matrix3 term = Matrix3::Identity();
  // ||scaled|| <= 1, so terms shrink at least factorially; 64 is a hard stop.
  for (int k = 1; k <= 64; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < tol) break;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

}  // namespace bmfrenet
