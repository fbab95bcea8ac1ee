#ifndef BMFRENET_TENSOR_HPP
#define BMFRENET_TENSOR_HPP

#include <Eigen/Dense>
#include <utility>

#include "bmfrenet/errors.hpp"

namespace bmfrenet {

/// Tangent vector components relative to the left-invariant frame {E1,E2,E3}.
using FrameVector = Eigen::Vector3d;

/// Components of a 1-form on {E1,E2,E3}.
using Covector = Eigen::Vector3d;

using Matrix3 = Eigen::Matrix3d;

/// E1, E2 or E3 for i in {0,1,2}.
FrameVector basis_vector(int i);

enum class CausalCharacter { Spacelike, Timelike, Null, Zero };

const char* to_string(CausalCharacter c);

/// Symmetric nondegenerate bilinear form on the frame. The lower triangle of
/// the input is mirrored, so symmetry is exact regardless of the upper entries.
class MetricTensor {
public:
  explicit MetricTensor(const Matrix3& components);

  static MetricTensor diagonal(double m11, double m22, double m33);

  const Matrix3& components() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double det() const { return m_.determinant(); }
  Matrix3 inverse() const;

  /// Counts of positive/negative eigenvalues of the symmetric matrix.
  std::pair<int, int> signature(double tol = 1e-9) const;

private:
  Matrix3 m_;
};

/// g(u, v) = sum_ij u_i g_ij v_j.
double inner(const MetricTensor& g, const FrameVector& u, const FrameVector& v);

/// zero when all components are below tol, null when |g(v,v)| < tol,
/// otherwise the sign of g(v,v) decides.
CausalCharacter causal_character(const MetricTensor& g, const FrameVector& v,
                                 double tol = 1e-9);

/// Truncated power series sum_k A^k / k! with scaling and squaring for
/// ||A|| > 1. Brute-force reference route for the closed-form exponential.
Matrix3 exp_series(const Matrix3& a, double tol = 1e-12);

}  // namespace bmfrenet

#endif
