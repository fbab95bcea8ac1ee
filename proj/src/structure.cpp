#include "bmfrenet/structure.hpp"

#include <algorithm>
#include <cmath>

namespace bmfrenet {

AcbmStructure lie_group_model_structure() {
  Matrix3 phi;
  phi << 0, -1, 0,
         1,  0, 0,
         0,  0, 0;
  return AcbmStructure{phi, FrameVector(0, 0, 1), Covector(0, 0, 1),
                       MetricTensor::diagonal(1, -1, 1)};
}

double ValidationReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : residuals) m = std::max(m, r.value);
  return m;
}

bool ValidationReport::passed(double t) const {
  return max_residual() < t;
}

ValidationReport validate_structure(const AcbmStructure& s, double tol) {
  ValidationReport report;
  report.tol = tol;
  auto add = [&report](std::string name, double value) {
    report.residuals.push_back({std::move(name), value});
  };

  // phi^2 X = -X + eta(X) xi on the basis.
  double phi_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const FrameVector e = basis_vector(i);
    const FrameVector lhs = s.apply_phi(s.apply_phi(e));
    const FrameVector rhs = -e + s.apply_eta(e) * s.xi;
    phi_sq = std::max(phi_sq, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  add("phi_squared", phi_sq);

  add("eta_of_xi", std::abs(s.apply_eta(s.xi) - 1.0));

  // g(phi X, phi Y) = -g(X,Y) + eta(X) eta(Y) on basis pairs.
  double bm = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const FrameVector ei = basis_vector(i);
      const FrameVector ej = basis_vector(j);
      const double lhs = inner(s.g, s.apply_phi(ei), s.apply_phi(ej));
      const double rhs = -inner(s.g, ei, ej) + s.apply_eta(ei) * s.apply_eta(ej);
      bm = std::max(bm, std::abs(lhs - rhs));
    }
  }
  add("b_metric", bm);

  double eta_phi = 0.0;
  for (int i = 0; i < 3; ++i) {
    eta_phi = std::max(eta_phi, std::abs(s.apply_eta(s.apply_phi(basis_vector(i)))));
  }
  add("eta_circ_phi", eta_phi);

  add("phi_of_xi", s.apply_phi(s.xi).cwiseAbs().maxCoeff());

  double eta_dual = 0.0;
  for (int i = 0; i < 3; ++i) {
    const FrameVector e = basis_vector(i);
    eta_dual = std::max(eta_dual, std::abs(s.apply_eta(e) - inner(s.g, e, s.xi)));
  }
  add("eta_metric_duality", eta_dual);

  add("xi_unit", std::abs(inner(s.g, s.xi, s.xi) - 1.0));

  report.all_passed = report.passed(tol);
  return report;
}

MetricTensor assoc_metric(const AcbmStructure& s) {
  Matrix3 gt;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const FrameVector ei = basis_vector(i);
      const FrameVector ej = basis_vector(j);
      gt(i, j) = inner(s.g, ei, s.apply_phi(ej)) + s.apply_eta(ei) * s.apply_eta(ej);
    }
  }
  return MetricTensor(gt);
}

double f4_tensor(const AcbmStructure& s, double theta_xi, const FrameVector& x,
                 const FrameVector& y, const FrameVector& z) {
  const FrameVector px = s.apply_phi(x);
  return -0.5 * theta_xi *
         (inner(s.g, px, s.apply_phi(y)) * s.apply_eta(z) +
          inner(s.g, px, s.apply_phi(z)) * s.apply_eta(y));
}

double FTensorTable::eval(const FrameVector& x, const FrameVector& y,
                          const FrameVector& z) const {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) sum += x(i) * y(j) * z(k) * f[i][j][k];
  return sum;
}

double FTensorTable::symmetry_residual() const {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m = std::max(m, std::abs(f[i][j][k] - f[i][k][j]));
  return m;
}

FTensorTable f_table_from_nabla(const ConnectionTable& conn,
                                const AcbmStructure& s) {
  FTensorTable table;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // nabla_{E_i}(phi E_j) for constant-coefficient phi E_j, minus
      // phi(nabla_{E_i} E_j).
      FrameVector cov = FrameVector::Zero();
      for (int m = 0; m < 3; ++m) cov += s.phi(m, j) * conn[i][m];
      cov -= s.apply_phi(conn[i][j]);
      for (int k = 0; k < 3; ++k) {
        table.at(i, j, k) = inner(s.g, cov, basis_vector(k));
      }
    }
  }
  return table;
}

LeeForms lee_forms(const FTensorTable& f, const AcbmStructure& s) {
  const Matrix3 ginv = s.g.inverse();
  LeeForms forms{Covector::Zero(), Covector::Zero(), Covector::Zero()};
  for (int k = 0; k < 3; ++k) {
    const FrameVector ek = basis_vector(k);
    double theta = 0.0;
    double theta_star = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        theta += ginv(i, j) * f(i, j, k);
        theta_star += ginv(i, j) * f.eval(basis_vector(i), s.apply_phi(basis_vector(j)), ek);
      }
    }
    forms.theta(k) = theta;
    forms.theta_star(k) = theta_star;
    forms.omega(k) = f.eval(s.xi, s.xi, ek);
  }
  return forms;
}

}  // namespace bmfrenet
