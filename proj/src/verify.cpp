#include "bmfrenet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bmfrenet/assoc_curves.hpp"
#include "bmfrenet/matrix_repr.hpp"
#include "bmfrenet/null_frenet.hpp"
#include "bmfrenet/structure.hpp"
#include "bmfrenet/tensor.hpp"

namespace bmfrenet {

namespace {

constexpr double kPi = 3.14159265358979323846;

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  FrameVector vector(double lo, double hi) {
    return FrameVector(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
  }

  /// (a, b) from [-2,2]^2 with near-degenerate pairs rejected.
  SlantParams slant() {
    for (;;) {
      const double a = uniform(-2.0, 2.0);
      const double b = uniform(-2.0, 2.0);
      const double d = (a * a) * (a * a) + b * b;
      if (d >= 1e-6) return SlantParams(a, b);
    }
  }

  double nonzero(double lo, double hi, double min_abs) {
    for (;;) {
      const double v = uniform(lo, hi);
      if (std::abs(v) >= min_abs) return v;
    }
  }

private:
  std::mt19937_64 gen_;
};

std::vector<double> sample_times() {
  std::vector<double> t;
  for (int i = 0; i <= 10; ++i) t.push_back(-1.0 + 0.37 * i);
  return t;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verify(std::uint64_t seed, double base_tol) {
  VerifyReport report{seed, base_tol, {}};
  Sampler rng(seed);
  const AcbmStructure model_structure = lie_group_model_structure();
  const MetricTensor& g = model_structure.g;

  auto add = [&report, base_tol](const std::string& name, double residual,
                                 double tol_factor = 1.0) {
    const double tol = base_tol * tol_factor;
    report.checks.push_back({name, residual, tol, residual < tol});
  };

  // --- tensor core -----------------------------------------------------

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const FrameVector u = rng.vector(-2.0, 2.0);
      const FrameVector v = rng.vector(-2.0, 2.0);
      worst = std::max(worst, std::abs(inner(g, u, v) - inner(g, v, u)));
    }
    add("inner_symmetry", worst);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      Matrix3 a;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a(r, c) = rng.uniform(-1.0, 1.0);
      const Matrix3 prod = exp_series(a, 1e-15) * exp_series(-a, 1e-15);
      worst = std::max(worst, (prod - Matrix3::Identity()).cwiseAbs().maxCoeff());
    }
    add("exp_series_inverse", worst);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      FrameVector v = rng.vector(-2.0, 2.0);
      if (i % 5 == 0) v = build_tangent(rng.slant());  // exactly null inputs
      const double lam =
          (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
      if (causal_character(g, v) != causal_character(g, lam * v)) worst = 1.0;
    }
    add("causal_scale_invariance", worst);
  }

  // --- almost contact B-metric structure -------------------------------

  add("structure_axioms", validate_structure(model_structure).max_residual());

  {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double alpha = rng.nonzero(-3.0, 3.0, 0.05);
      const LieModel model(alpha);
      const FTensorTable table =
          f_table_from_nabla(model.connection(), model.structure());
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            worst = std::max(
                worst, std::abs(table(a, b, c) -
                                f4_tensor(model.structure(), model.theta_xi(),
                                          basis_vector(a), basis_vector(b),
                                          basis_vector(c))));
    }
    add("f_table_vs_f4_formula", worst);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const LieModel model(rng.uniform(-2.0, 2.0));
      const AcbmStructure& s = model.structure();
      const FTensorTable table = f_table_from_nabla(model.connection(), s);
      worst = std::max(worst, table.symmetry_residual());
      const FrameVector x = rng.vector(-2.0, 2.0);
      const FrameVector y = rng.vector(-2.0, 2.0);
      const FrameVector z = rng.vector(-2.0, 2.0);
      const double lhs = table.eval(x, y, z);
      worst = std::max(worst, std::abs(lhs - table.eval(x, z, y)));
      const double rhs = table.eval(x, s.apply_phi(y), s.apply_phi(z)) +
                         s.apply_eta(y) * table.eval(x, s.xi, z) +
                         s.apply_eta(z) * table.eval(x, y, s.xi);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    add("f_tensor_symmetries", worst);
  }

  {
    const MetricTensor gt = assoc_metric(model_structure);
    double worst = 0.0;
    if (gt.signature() != std::make_pair(2, 1)) worst = 1.0;
    auto contact_block_ok = [](const MetricTensor& m) {
      Eigen::Matrix2d block = m.components().topLeftCorner<2, 2>();
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(block,
                                                            Eigen::EigenvaluesOnly);
      return solver.eigenvalues()(0) < -1e-9 && solver.eigenvalues()(1) > 1e-9;
    };
    if (!contact_block_ok(g) || !contact_block_ok(gt)) worst = 1.0;
    add("metric_signatures", worst);
  }

  // --- Lie model --------------------------------------------------------

  {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double alpha = rng.uniform(-3.0, 3.0);
      const LieModel model(alpha);
      ConnectionTable expected;
      for (auto& row : expected)
        for (auto& entry : row) entry = FrameVector::Zero();
      expected[0][1] = alpha * model.structure().xi;
      expected[1][0] = alpha * model.structure().xi;
      expected[0][2] = alpha * basis_vector(1);
      expected[1][2] = -alpha * basis_vector(0);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          worst = std::max(worst, (model.connection()[r][c] - expected[r][c])
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    add("koszul_vs_connection_table", worst);
  }

  {
    double compat = 0.0;
    double torsion = 0.0;
    double tilde_compat = 0.0;
    double brackets = 0.0;
    for (int i = 0; i < 8; ++i) {
      const LieModel model(rng.uniform(-3.0, 3.0));
      const MetricTensor& gt = model.assoc();
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const FrameVector ea = basis_vector(a);
          const FrameVector eb = basis_vector(b);
          torsion = std::max(
              torsion, (model.nabla(ea, eb) - model.nabla(eb, ea) -
                        model.bracket(ea, eb))
                           .cwiseAbs()
                           .maxCoeff());
          for (int c = 0; c < 3; ++c) {
            const FrameVector ec = basis_vector(c);
            compat = std::max(
                compat, std::abs(inner(g, model.nabla(ea, eb), ec) +
                                 inner(g, eb, model.nabla(ea, ec))));
            tilde_compat = std::max(
                tilde_compat, std::abs(inner(gt, model.tilde_nabla(ea, eb), ec) +
                                       inner(gt, eb, model.tilde_nabla(ea, ec))));
          }
        }
      }
      brackets = std::max(brackets, model.antisymmetry_residual());
      brackets = std::max(brackets, model.jacobi_residual());
    }
    add("metric_compatibility", compat);
    add("torsion_free", torsion);
    add("tilde_metric_compatibility", tilde_compat);
    add("bracket_identities", brackets);
  }

  {
    // Field with nonconstant coefficients: exact derivatives against
    // central differences (documented tolerance 1e-6, step 1e-5).
    CurveVectorField field;
    field.coeffs = {[](double t) { return std::sin(t); },
                    [](double t) { return t * t; },
                    [](double) { return 7.0; }};
    field.dcoeffs = {[](double t) { return std::cos(t); },
                     [](double t) { return 2.0 * t; },
                     [](double) { return 0.0; }};
    add("curve_field_consistency", field.consistency_residual(sample_times()),
        1e3);
  }

  // --- null Frenet theory ------------------------------------------------

  {
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
      const SlantParams p = rng.slant();
      const SlantInvariants inv =
          slant_invariants(build_tangent(p), model_structure);
      worst = std::max({worst, std::abs(inv.a - p.a()), std::abs(inv.b - p.b()),
                        inv.null_residual});
    }
    add("slant_roundtrip", worst);
  }

  {
    double relations = 0.0;
    double h_identity = 0.0;
    double orientation = 0.0;
    double uniqueness = 0.0;
    double closed_vs_direct = 0.0;
    for (int i = 0; i < 40; ++i) {
      const SlantParams p = rng.slant();
      const double alpha = rng.nonzero(-2.0, 2.0, 0.25);
      const double beta = rng.nonzero(-2.0, 2.0, 0.25);
      const LieModel model(alpha);
      const AcbmStructure& s = model.structure();
      const FrameVector tangent = build_tangent(p);
      const FrameVector phi_tangent = s.apply_phi(tangent);
      const FramePair fam = frame_family(p, model, beta);

      relations = std::max(
          {relations, std::abs(inner(g, tangent, fam.n) - 1.0),
           std::abs(inner(g, fam.w, fam.w) - 1.0), std::abs(inner(g, fam.n, fam.n)),
           std::abs(inner(g, fam.n, fam.w)), std::abs(inner(g, tangent, fam.w))});

      const CurvaturePair hk = h_and_k1(p, model, beta);
      h_identity = std::max(h_identity, std::abs(hk.h + beta * hk.k1));

      Matrix3 frame_cols;
      frame_cols.col(0) = tangent;
      frame_cols.col(1) = fam.n;
      frame_cols.col(2) = fam.w;
      Matrix3 ref_cols;
      ref_cols.col(0) = tangent;
      ref_cols.col(1) = s.xi;
      ref_cols.col(2) = phi_tangent;
      if (frame_cols.determinant() * ref_cols.determinant() <= 0.0) {
        orientation = 1.0;
      }

      // Only beta = 0 yields h = 0 for a non-geodesic curve.
      if (hk.k1 != 0.0 && hk.h == 0.0) uniqueness = 1.0;

      const FrameVector accel = model.nabla(tangent, tangent);
      closed_vs_direct =
          std::max({closed_vs_direct, std::abs(hk.h - inner(g, accel, fam.n)),
                    std::abs(hk.k1 - inner(g, accel, fam.w))});

      const NullFrenetFrame f1 = unique_frame_f1(p, model);
      const FrameVector dn = model.nabla(tangent, f1.n);
      closed_vs_direct = std::max(
          {closed_vs_direct, std::abs(f1.k1 - inner(g, accel, f1.w)),
           std::abs(f1.k2 - inner(g, dn, f1.w)),
           std::abs(f1.k1 * f1.k1 -
                    0.25 * model.theta_xi() * model.theta_xi() * p.discriminant()),
           std::abs(f1.k2 * p.sqrt_discriminant() -
                    0.25 * p.a() * p.a() * model.theta_xi())});
    }
    add("frame_relations", relations);
    add("h_plus_beta_k1", h_identity);
    add("frame_orientation", orientation);
    add("distinguished_frame_uniqueness", uniqueness);
    add("curvature_closed_vs_direct", closed_vs_direct);
  }

  {
    double system = 0.0;
    double expansion = 0.0;
    const std::vector<double> times = sample_times();
    for (int i = 0; i < 25; ++i) {
      const SlantParams p = rng.slant();
      const LieModel model(rng.uniform(-2.0, 2.0));
      const NullFrenetFrame f1 = unique_frame_f1(p, model);
      system = std::max(system,
                        frenet_residuals(f1, model, times).max_residual());
      const AcbmStructure& s = model.structure();
      const FrameVector accel = model.nabla(f1.tangent, f1.tangent);
      const FrameVector expanded =
          accel + 0.5 * p.b() * model.theta_xi() * s.xi -
          0.5 * p.a() * model.theta_xi() * s.apply_phi(f1.tangent);
      expansion = std::max(expansion, expanded.cwiseAbs().maxCoeff());
    }
    add("frenet_system", system);
    add("tangent_equation_expansion", expansion);
  }

  {
    double worst = 1.0;
    try {
      const SlantParams degenerate(0.0, 0.0);
      (void)degenerate;
    } catch (const DegenerateSlantError&) {
      worst = 0.0;
    }
    // Every direction in the contact distribution sees a nonzero pair
    // (g(v,v), g(v,phi v)); a common zero would make the restriction
    // degenerate.
    for (int k = 0; k < 64; ++k) {
      const double u = 2.0 * kPi * k / 64.0;
      const FrameVector v(std::cos(u), std::sin(u), 0.0);
      const double q = inner(g, v, v);
      const double qp = inner(g, v, model_structure.apply_phi(v));
      if (std::abs(q) < 1e-9 && std::abs(qp) < 1e-9) worst = 1.0;
    }
    add("degenerate_pair_rejection", worst);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SlantParams p = rng.slant();
      const double c0 = rng.uniform(-2.0, 2.0);
      const double c1 = rng.nonzero(-2.0, 2.0, 0.1);
      const SlantParams q = reparam_behavior(p, c0, c1);
      worst = std::max({worst, std::abs(q.a() - c1 * p.a()),
                        std::abs(q.b() - c1 * c1 * p.b())});
      // The scaled tangent realizes the transformed constants.
      const SlantInvariants inv =
          slant_invariants(c1 * build_tangent(p), model_structure);
      worst = std::max(
          {worst, std::abs(inv.a - q.a()), std::abs(inv.b - q.b())});
    }
    bool threw = false;
    try {
      (void)reparam_behavior(SlantParams(1.0, 0.0), 0.0, 0.0);
    } catch (const InvalidReparamError&) {
      threw = true;
    }
    if (!threw) worst = 1.0;
    add("reparam_affine_transform", worst);
  }

  // --- associated-metric curves ------------------------------------------

  {
    double geodesic = 0.0;
    double slant_tilde = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SlantParams p(0.0, rng.nonzero(-2.0, 2.0, 0.05));
      const LieModel model(rng.uniform(-2.0, 2.0));
      const MetricTensor& gt = model.assoc();
      geodesic = std::max(geodesic, legendre_tilde_geodesic_residual(p, model));
      const FrameVector unit = build_tangent(p) / arclength_factor(p);
      const AcbmStructure& s = model.structure();
      slant_tilde = std::max(
          {slant_tilde, std::abs(inner(gt, unit, s.xi)),
           std::abs(inner(gt, unit, s.apply_phi(unit))),
           std::abs(std::abs(inner(gt, unit, unit)) - 1.0)});
      const TildeCharacter expected =
          p.b() > 0.0 ? TildeCharacter::Spacelike : TildeCharacter::Timelike;
      if (tilde_character(p, s) != expected) slant_tilde = 1.0;
    }
    add("legendre_tilde_geodesic", geodesic);
    add("legendre_tilde_slant", slant_tilde);
  }

  {
    double gram = 0.0;
    double system = 0.0;
    double links = 0.0;
    const std::vector<double> times = sample_times();
    for (int i = 0; i < 20; ++i) {
      const SlantParams p(rng.nonzero(-2.0, 2.0, 0.05), 0.0);
      const double alpha = rng.nonzero(-2.0, 2.0, 0.05);
      const LieModel model(alpha);
      const MetricTensor& gt = model.assoc();
      const TildeApparatus app = tilde_frenet_order3(p, model);

      const FrameVector frame_fields[3] = {app.e1, *app.e2, *app.e3};
      const double expected_signs[3] = {1.0, 1.0, -1.0};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          const double want = r == c ? expected_signs[r] : 0.0;
          gram = std::max(gram, std::abs(inner(gt, frame_fields[r],
                                               frame_fields[c]) -
                                         want));
        }
      }

      system = std::max(
          system, tilde_frenet_residuals(app, p, model, times).max_residual());

      const NullFrenetFrame f1 = unique_frame_f1(p, model);
      const double a = p.a();
      const double eps_tilde = model.theta_xi() > 0.0 ? 1.0 : -1.0;
      const double eps_a = a > 0.0 ? 1.0 : -1.0;
      const FrameVector e2_from_f1 =
          eps_tilde * (-f1.tangent / (2.0 * a) - a * f1.n + f1.w);
      const FrameVector e3_from_f1 = eps_a * (-f1.tangent / a + f1.w);
      links = std::max({links, (*app.e2 - e2_from_f1).cwiseAbs().maxCoeff(),
                        (*app.e3 - e3_from_f1).cwiseAbs().maxCoeff(),
                        std::abs(app.k_tilde - std::abs(f1.k1) / (a * a)),
                        std::abs(app.tau_tilde - app.k_tilde),
                        std::abs(app.k_tilde - 0.5 * std::abs(model.theta_xi()))});

      // Curvature magnitude from the acceleration itself.
      const FrameVector unit = build_tangent(p) / arclength_factor(p);
      const FrameVector accel = model.tilde_nabla(unit, unit);
      links = std::max(links, std::abs(std::sqrt(std::abs(
                                           inner(gt, accel, accel))) -
                                       app.k_tilde));
    }
    add("order3_gram_orthonormality", gram);
    add("order3_frenet_system", system);
    add("order3_curvature_links", links);
  }

  {
    double worst = 0.0;
    const std::vector<double> ts = {0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> k, tau;
    auto fill = [&](auto kf, auto tf) {
      k.clear();
      tau.clear();
      for (double t : ts) {
        k.push_back(kf(t));
        tau.push_back(tf(t));
      }
    };
    fill([](double) { return 2.0; }, [](double) { return 0.0; });
    if (classify_helix(k, tau) != HelixClass::PseudoCircle) worst = 1.0;
    fill([](double) { return 1.5; }, [](double) { return 1.5; });
    if (classify_helix(k, tau) != HelixClass::ProperHelix) worst = 1.0;
    fill([](double t) { return 1.0 + t; }, [](double t) { return 1.0 + t; });
    if (classify_helix(k, tau) != HelixClass::GeneralizedHelix) worst = 1.0;
    fill([](double) { return 0.0; }, [](double) { return 0.0; });
    if (classify_helix(k, tau) != HelixClass::Geodesic) worst = 1.0;
    // Model curvatures are the constant |alpha|.
    const LieModel model(rng.nonzero(-2.0, 2.0, 0.05));
    const SlantParams p(1.0, 0.0);
    const TildeApparatus app = tilde_frenet_order3(p, model);
    fill([&](double) { return app.k_tilde; }, [&](double) { return app.tau_tilde; });
    if (classify_helix(k, tau) != HelixClass::ProperHelix) worst = 1.0;
    add("helix_classification", worst);
  }

  // --- matrix representation ----------------------------------------------

  {
    double vs_series = 0.0;
    double invariants = 0.0;
    double charpoly = 0.0;
    for (int i = 0; i < 200; ++i) {
      const FrameVector x = rng.vector(-3.0, 3.0);
      const double alpha = rng.uniform(-3.0, 3.0);
      const GroupMatrix closed = exp_closed(x, alpha);
      vs_series = std::max(
          vs_series, (closed.matrix() - exp_series(ad_of(x, alpha), 1e-15))
                         .cwiseAbs()
                         .maxCoeff());
      invariants = std::max(invariants, closed.invariant_residual());

      const Matrix3 a = ad_of(x, alpha);
      const double w = x(2) * alpha;
      const double minor_sum =
          (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) +
          (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
          (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
      // Characteristic polynomial -l(l^2 + w^2): trace and determinant
      // vanish, the second elementary symmetric function equals w^2, and
      // Cayley-Hamilton gives A^3 + w^2 A = 0.
      charpoly = std::max({charpoly, std::abs(a.trace()),
                           std::abs(a.determinant()),
                           std::abs(minor_sum - w * w),
                           (a * a * a + w * w * a).cwiseAbs().maxCoeff()});
    }
    add("exp_closed_vs_series", vs_series);
    add("group_matrix_invariants", invariants);
    add("ad_characteristic_polynomial", charpoly);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      SlantParams p = rng.slant();
      if (i % 4 == 0) p = SlantParams(0.0, rng.nonzero(-2.0, 2.0, 0.05));
      const double alpha = rng.uniform(-2.0, 2.0);
      const double t = rng.uniform(-2.0, 2.0);
      const double s = rng.uniform(-2.0, 2.0);
      const Matrix3 lhs = adjoint_curve(p, alpha, t + s).matrix();
      const Matrix3 rhs =
          adjoint_curve(p, alpha, t).matrix() * adjoint_curve(p, alpha, s).matrix();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    add("adjoint_homomorphism", worst);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double x1 = rng.uniform(-3.0, 3.0);
      const double x2 = rng.uniform(-3.0, 3.0);
      const double alpha = rng.uniform(-3.0, 3.0);
      const Matrix3 near_seam =
          exp_closed(FrameVector(x1, x2, 1e-8), alpha).matrix();
      const Matrix3 at_seam = exp_closed(FrameVector(x1, x2, 0.0), alpha).matrix();
      worst = std::max(worst, (near_seam - at_seam).cwiseAbs().maxCoeff());
    }
    // Documented seam tolerance is 1e-6 against the 1e-9 default.
    add("exp_branch_seam", worst, 1e3);
  }

  return report;
}

}  // namespace bmfrenet
