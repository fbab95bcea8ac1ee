#include "bmfrenet/matrix_repr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bmfrenet {

double GroupMatrix::det_residual() const {
  return std::abs(m_.determinant() - 1.0);
}

double GroupMatrix::bottom_row_residual() const {
  return std::max({std::abs(m_(2, 0)), std::abs(m_(2, 1)), std::abs(m_(2, 2) - 1.0)});
}

double GroupMatrix::rotation_block_residual() const {
  const Eigen::Matrix2d r = m_.topLeftCorner<2, 2>();
  const Eigen::Matrix2d gram = r.transpose() * r - Eigen::Matrix2d::Identity();
  return std::max(gram.cwiseAbs().maxCoeff(), std::abs(r.determinant() - 1.0));
}

double GroupMatrix::invariant_residual() const {
  return std::max({det_residual(), bottom_row_residual(), rotation_block_residual()});
}

std::array<Matrix3, 3> ad_matrices(double alpha) {
  Matrix3 m1 = Matrix3::Zero();
  Matrix3 m2 = Matrix3::Zero();
  Matrix3 m3 = Matrix3::Zero();
  m1(1, 2) = alpha;
  m2(0, 2) = -alpha;
  m3(0, 1) = alpha;
  m3(1, 0) = -alpha;
  return {m1, m2, m3};
}

Matrix3 ad_of(const FrameVector& x, double alpha) {
  Matrix3 a = Matrix3::Zero();
  a(0, 1) = x(2) * alpha;
  a(0, 2) = -x(1) * alpha;
  a(1, 0) = -x(2) * alpha;
  a(1, 2) = x(0) * alpha;
  return a;
}

GroupMatrix exp_closed(const FrameVector& x, double alpha) {
  const double x1 = x(0);
  const double x2 = x(1);
  const double x3 = x(2);
  if (x3 == 0.0) {
    // A^2 = 0 here, so the series terminates at I + A.
    Matrix3 m = Matrix3::Identity();
    m(0, 2) = -x2 * alpha;
    m(1, 2) = x1 * alpha;
    return GroupMatrix(m);
  }
  // Range-reduce the rotation angle before trig evaluation.
  const double angle = std::remainder(alpha * x3, 2.0 * std::numbers::pi);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double half = std::sin(0.5 * angle);
  const double vercos = 2.0 * half * half;  // 1 - cos, without cancellation
  Matrix3 m;
  m << c, s, (x1 / x3) * vercos - (x2 / x3) * s,
      -s, c, (x2 / x3) * vercos + (x1 / x3) * s,
       0, 0, 1;
  return GroupMatrix(m);
}

GroupMatrix adjoint_curve(const SlantParams& p, double alpha, double t) {
  return exp_closed(t * build_tangent(p), alpha);
}

FrameMatrices frame_matrices(const NullFrenetFrame& frame, double alpha) {
  return FrameMatrices{ad_of(frame.tangent, alpha), ad_of(frame.w, alpha),
                       ad_of(frame.n, alpha)};
}

}  // namespace bmfrenet
