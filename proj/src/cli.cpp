#include "bmfrenet/cli.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "bmfrenet/assoc_curves.hpp"
#include "bmfrenet/matrix_repr.hpp"
#include "bmfrenet/null_frenet.hpp"

namespace bmfrenet {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_value(const json& j, std::string& out, int indent, int depth) {
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out.append(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        out += json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      out.append(static_cast<std::size_t>(indent) * depth, ' ');
      out += "}";
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out.append(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        dump_value(item, out, indent, depth + 1);
      }
      out += "\n";
      out.append(static_cast<std::size_t>(indent) * depth, ' ');
      out += "]";
      break;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::string:
      out += j.dump();
      break;
    default:
      out += "null";
      break;
  }
}

json vec_json(const FrameVector& v) {
  return json::array({v(0), v(1), v(2)});
}

json mat_json(const Matrix3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
  }
  return rows;
}

std::vector<double> t_grid(const RunConfig& config) {
  std::vector<double> t;
  if (config.steps == 1) {
    t.push_back(config.t_min);
    return t;
  }
  const double span = config.t_max - config.t_min;
  for (int i = 0; i < config.steps; ++i) {
    t.push_back(config.t_min + span * i / (config.steps - 1));
  }
  return t;
}

json flags_json(const NullCurveFlags& flags) {
  return json{{"geodesic", flags.geodesic},
              {"generalized_null_cubic", flags.generalized_null_cubic},
              {"phi_geodesic", flags.phi_geodesic},
              {"legendre", flags.legendre}};
}

}  // namespace

void RunConfig::validate() const {
  if (steps < 1) {
    throw std::invalid_argument("--steps must be at least 1");
  }
  if (!(t_min <= t_max)) {
    throw std::invalid_argument("--t-min must not exceed --t-max");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("--tol must be positive");
  }
  if (format == OutputFormat::Csv && command != Command::Curve) {
    throw std::invalid_argument("--format csv is only available for 'curve'");
  }
}

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  return out;
}

json frame_document(const RunConfig& config) {
  const SlantParams p(config.a, config.b);
  const LieModel model(config.alpha);
  const NullFrenetFrame f1 = unique_frame_f1(p, model);
  const NullCurveFlags flags = classify_null_curve(p, model);

  json doc{{"a", p.a()},
           {"b", p.b()},
           {"alpha", model.alpha()},
           {"theta_xi", model.theta_xi()},
           {"tangent", vec_json(f1.tangent)},
           {"w1", vec_json(f1.w)},
           {"n1", vec_json(f1.n)},
           {"h", f1.h},
           {"k1", f1.k1},
           {"k2", f1.k2},
           {"flags", flags_json(flags)}};

  if (config.beta_given) {
    const FramePair family = frame_family(p, model, config.beta);
    const CurvaturePair hk = h_and_k1(p, model, config.beta);
    doc["family"] = json{{"beta", config.beta},
                         {"w", vec_json(family.w)},
                         {"n", vec_json(family.n)},
                         {"h", hk.h},
                         {"k1", hk.k1}};
  }
  return doc;
}

json curve_document(const RunConfig& config) {
  const SlantParams p(config.a, config.b);
  json rows = json::array();
  for (const double t : t_grid(config)) {
    const GroupMatrix m = adjoint_curve(p, config.alpha, t);
    rows.push_back(json{{"t", t},
                        {"m", mat_json(m.matrix())},
                        {"det_residual", m.det_residual()},
                        {"bottom_row_residual", m.bottom_row_residual()},
                        {"rotation_block_residual", m.rotation_block_residual()}});
  }
  return json{{"a", config.a},
              {"b", config.b},
              {"alpha", config.alpha},
              {"rows", rows}};
}

std::string curve_csv(const RunConfig& config) {
  const SlantParams p(config.a, config.b);
  std::string out = "t,m11,m12,m13,m21,m22,m23,m31,m32,m33,det_residual\n";
  for (const double t : t_grid(config)) {
    const GroupMatrix gm = adjoint_curve(p, config.alpha, t);
    const Matrix3& m = gm.matrix();
    out += format_double(t);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        out += ',';
        out += format_double(m(i, j));
      }
    }
    out += ',';
    out += format_double(gm.det_residual());
    out += '\n';
  }
  return out;
}

json classify_document(const RunConfig& config) {
  const SlantParams p(config.a, config.b);
  const LieModel model(config.alpha);

  json doc{{"a", p.a()},
           {"b", p.b()},
           {"alpha", model.alpha()},
           {"tilde_character", to_string(tilde_character(p, model.structure()))},
           {"arclength_factor", arclength_factor(p)}};

  if (p.a() == 0.0) {
    // Legendre curves are tilde-geodesics.
    doc["order"] = 1;
    doc["helix_class"] = to_string(HelixClass::Geodesic);
    doc["tilde_geodesic_residual"] = legendre_tilde_geodesic_residual(p, model);
    return doc;
  }

  const TildeApparatus app = tilde_frenet_order3(p, model);
  doc["order"] = app.order;
  doc["k_tilde"] = app.k_tilde;
  doc["tau_tilde"] = app.tau_tilde;
  if (app.order != 3) {
    doc["helix_class"] = to_string(HelixClass::Geodesic);
    return doc;
  }

  const std::vector<double> samples = t_grid(config);
  std::vector<double> k(samples.size(), app.k_tilde);
  std::vector<double> tau(samples.size(), app.tau_tilde);
  doc["helix_class"] = to_string(classify_helix(k, tau, config.tol));
  doc["e1"] = vec_json(app.e1);
  doc["e2"] = vec_json(*app.e2);
  doc["e3"] = vec_json(*app.e3);
  doc["signs"] = json::array({app.eps1, app.eps2, app.eps3});
  const TildeFrenetResiduals res = tilde_frenet_residuals(app, p, model, samples);
  doc["frenet_residuals"] = json{
      {"e1_eq", res.e1_eq}, {"e2_eq", res.e2_eq}, {"e3_eq", res.e3_eq}};
  return doc;
}

json structure_document(const RunConfig& config) {
  const LieModel model(config.alpha);
  const AcbmStructure& s = model.structure();
  const FTensorTable table = f_table_from_nabla(model.connection(), s);
  const LeeForms lee = lee_forms(table, s);

  json connection = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(vec_json(model.connection()[i][j]));
    connection.push_back(row);
  }

  json f_nonzero = json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (table(i, j, k) != 0.0) {
          f_nonzero.push_back(json{{"ijk", json::array({i + 1, j + 1, k + 1})},
                                   {"value", table(i, j, k)}});
        }
      }
    }
  }

  return json{{"alpha", model.alpha()},
              {"theta_xi", model.theta_xi()},
              {"f0", model.is_f0()},
              {"g", mat_json(model.metric().components())},
              {"g_tilde", mat_json(model.assoc().components())},
              {"connection", connection},
              {"f_nonzero", f_nonzero},
              {"lee_forms", json{{"theta", vec_json(lee.theta)},
                                 {"theta_star", vec_json(lee.theta_star)},
                                 {"omega", vec_json(lee.omega)}}}};
}

json verify_document(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(json{{"name", check.name},
                          {"max_residual", check.max_residual},
                          {"tol", check.tol},
                          {"passed", check.passed}});
  }
  return json{{"seed", report.seed},
              {"tol", report.base_tol},
              {"all_passed", report.all_passed()},
              {"checks", checks}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  std::string format = "json";

  CLI::App app{"phi-slant null curves on the 3-dimensional Lie-group "
               "B-metric model: frames, curvatures, classification and the "
               "adjoint matrix representation"};
  app.require_subcommand(1);

  auto add_slant = [&config](CLI::App* cmd) {
    cmd->add_option("--a", config.a, "slant constant a = eta(C')");
    cmd->add_option("--b", config.b, "slant constant b = g(C', phi C')");
    cmd->add_option("--alpha", config.alpha,
                    "structure constant alpha = theta(xi)/2");
  };
  auto add_tol = [&config](CLI::App* cmd) {
    cmd->add_option("--tol", config.tol, "numeric tolerance")
        ->envname("BMFRENET_TOL");
  };
  auto add_grid = [&config](CLI::App* cmd) {
    cmd->add_option("--t-min", config.t_min, "start of the parameter grid");
    cmd->add_option("--t-max", config.t_max, "end of the parameter grid");
    cmd->add_option("--steps", config.steps, "number of grid samples");
  };

  CLI::App* frame = app.add_subcommand(
      "frame", "distinguished Frenet frame, curvatures and flags");
  add_slant(frame);
  add_tol(frame);
  CLI::Option* beta_opt = frame->add_option(
      "--beta", config.beta, "also emit the general frame for this screen parameter");

  CLI::App* curve =
      app.add_subcommand("curve", "sample the adjoint trajectory Ad(C(t))");
  add_slant(curve);
  add_tol(curve);
  add_grid(curve);
  curve->add_option("--format", format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* classify = app.add_subcommand(
      "classify", "causal character, Frenet order and helix class under the "
                  "associated metric");
  add_slant(classify);
  add_tol(classify);
  add_grid(classify);

  CLI::App* structure_cmd = app.add_subcommand(
      "structure", "connection table, structure tensor and Lee forms");
  structure_cmd->add_option("--alpha", config.alpha,
                            "structure constant alpha = theta(xi)/2");
  add_tol(structure_cmd);

  CLI::App* verify =
      app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--seed", config.seed, "seed for the random grids");
  add_tol(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (app.got_subcommand(frame)) config.command = Command::Frame;
  if (app.got_subcommand(curve)) config.command = Command::Curve;
  if (app.got_subcommand(classify)) config.command = Command::Classify;
  if (app.got_subcommand(structure_cmd)) config.command = Command::Structure;
  if (app.got_subcommand(verify)) config.command = Command::Verify;
  config.beta_given = beta_opt->count() > 0;
  config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

  try {
    config.validate();
    switch (config.command) {
      case Command::Frame:
        out << dump_json(frame_document(config)) << "\n";
        return kExitOk;
      case Command::Curve:
        if (config.format == OutputFormat::Csv) {
          out << curve_csv(config);
        } else {
          out << dump_json(curve_document(config)) << "\n";
        }
        return kExitOk;
      case Command::Classify:
        out << dump_json(classify_document(config)) << "\n";
        return kExitOk;
      case Command::Structure:
        out << dump_json(structure_document(config)) << "\n";
        return kExitOk;
      case Command::Verify: {
        const VerifyReport report = run_verify(config.seed, config.tol);
        out << dump_json(verify_document(report)) << "\n";
        return report.all_passed() ? kExitOk : kExitVerifyFailed;
      }
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bmfrenet
