#ifndef BMFRENET_STRUCTURE_HPP
#define BMFRENET_STRUCTURE_HPP

#include <array>
#include <string>
#include <vector>

#include "bmfrenet/tensor.hpp"

namespace bmfrenet {

/// Almost contact B-metric structure (phi, xi, eta, g) in frame components.
/// Column j of phi holds the components of phi(E_j).
struct AcbmStructure {
  Matrix3 phi;
  FrameVector xi;
  Covector eta;
  MetricTensor g;

  FrameVector apply_phi(const FrameVector& x) const { return phi * x; }
  double apply_eta(const FrameVector& x) const { return eta.dot(x); }
};

/// The structure carried by the 3-dimensional Lie-group model:
/// phi E1 = E2, phi E2 = -E1, phi E3 = 0, xi = E3, g = diag(1,-1,1).
AcbmStructure lie_group_model_structure();

struct AxiomResidual {
  std::string name;
  double value;
};

struct ValidationReport {
  std::vector<AxiomResidual> residuals;
  double tol = 1e-9;
  bool all_passed = false;

  double max_residual() const;
  bool passed(double t) const;
};

/// Evaluates every structure axiom as a named max-norm residual over the
/// basis. Report-style: never throws on a broken structure.
ValidationReport validate_structure(const AcbmStructure& s, double tol = 1e-9);

/// Associated metric g~(X,Y) = g(X, phi Y) + eta(X) eta(Y).
/// A degenerate result (NondegeneracyError) signals an invalid structure.
MetricTensor assoc_metric(const AcbmStructure& s);

/// Structure tensor of the alpha-Sasakian-analogue class:
/// F(X,Y,Z) = -(theta_xi/2) { g(phi X, phi Y) eta(Z) + g(phi X, phi Z) eta(Y) }.
double f4_tensor(const AcbmStructure& s, double theta_xi, const FrameVector& x,
                 const FrameVector& y, const FrameVector& z);

/// Frame components of a (0,3)-tensor, entry (i,j,k) = F(E_i, E_j, E_k).
struct FTensorTable {
  std::array<std::array<std::array<double, 3>, 3>, 3> f{};

  double operator()(int i, int j, int k) const { return f[i][j][k]; }
  double& at(int i, int j, int k) { return f[i][j][k]; }

  /// Trilinear evaluation at arbitrary frame vectors.
  double eval(const FrameVector& x, const FrameVector& y,
              const FrameVector& z) const;

  /// max |F_ijk - F_ikj| over all indices.
  double symmetry_residual() const;
};

/// Covariant derivative table, entry (i,j) = nabla_{E_i} E_j.
using ConnectionTable = std::array<std::array<FrameVector, 3>, 3>;

/// F_ijk = g(nabla_{E_i}(phi E_j) - phi(nabla_{E_i} E_j), E_k) from a
/// completed connection table.
FTensorTable f_table_from_nabla(const ConnectionTable& conn,
                                const AcbmStructure& s);

struct LeeForms {
  Covector theta;
  Covector theta_star;
  Covector omega;
};

/// Metric traces of F: theta(X) = g^{ij} F(E_i, E_j, X),
/// theta*(X) = g^{ij} F(E_i, phi E_j, X), omega(X) = F(xi, xi, X).
LeeForms lee_forms(const FTensorTable& f, const AcbmStructure& s);

}  // namespace bmfrenet

#endif
