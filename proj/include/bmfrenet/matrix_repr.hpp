#ifndef BMFRENET_MATRIX_REPR_HPP
#define BMFRENET_MATRIX_REPR_HPP

#include <array>

#include "bmfrenet/null_frenet.hpp"

namespace bmfrenet {

/// Image of the exponential in Aut(g): a plane rotation block over the
/// invariant third axis. det = 1, bottom row (0,0,1).
class GroupMatrix {
public:
  explicit GroupMatrix(const Matrix3& m) : m_(m) {}

  const Matrix3& matrix() const { return m_; }

  double det_residual() const;
  double bottom_row_residual() const;
  double rotation_block_residual() const;
  double invariant_residual() const;

private:
  Matrix3 m_;
};

/// Matrices of ad_{E1}, ad_{E2}, ad_{E3} in the frame basis; column j of
/// the i-th matrix holds [E_i, E_j].
std::array<Matrix3, 3> ad_matrices(double alpha);

/// A = x1 M1 + x2 M2 + x3 M3, so that A Y = [X, Y].
Matrix3 ad_of(const FrameVector& x, double alpha);

/// Closed-form exp(ad_X). For x3 != 0 a rotation by alpha*x3 with a rank-one
/// third column; for x3 = 0 the matrix is two-step nilpotent and exp = I + A.
GroupMatrix exp_closed(const FrameVector& x, double alpha);

/// Adjoint image of the curve point at parameter t: exp(ad_{t C'}).
GroupMatrix adjoint_curve(const SlantParams& p, double alpha, double t);

struct FrameMatrices {
  Matrix3 tangent;
  Matrix3 w1;
  Matrix3 n1;
};

/// ad matrices of the distinguished frame fields.
FrameMatrices frame_matrices(const NullFrenetFrame& frame, double alpha);

}  // namespace bmfrenet

#endif
