// ringmap CLI: energy-minimizing harmonic maps between ring domains and the
// structural audits that go with them.
//
// Subcommands:
//   minimize       quasi-Newton energy descent from a problem JSON
//   modulus        conformal modulus of the ring between two curves
//   hopf           Hopf-differential fit and quasiconformality report
//   lift           minimal-surface lift exported as OBJ
//   verify         consolidated structural verification report
//   annulus-exact  closed-form round-annulus minimizer

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringmap/ringmap.hpp"

namespace {

using nlohmann::json;
using namespace ringmap;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

json envelope(const std::string& command, json config, json result, double seconds,
              const std::string& input_hash) {
  json doc;
  doc["command"] = command;
  doc["version"] = ringmap::version;
  doc["schema_version"] = ringmap::schema_version;
  doc["config"] = std::move(config);
  doc["input_hash"] = input_hash;
  doc["result"] = std::move(result);
  doc["timings"] = json{{"total_s", seconds}};
  return doc;
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

json map_json(const HarmonicMap& map) { return json::parse(map_to_json(map, 0)); }

json reparam_json(const BoundaryReparam& rep) {
  return json::parse(reparam_to_json(rep, 0));
}

json holder_json(const HolderFit& fit) {
  return json{{"exponent", fit.exponent},
              {"constant", fit.constant},
              {"r_squared", fit.r_squared},
              {"underresolved", fit.underresolved}};
}

json modulus_json(const ModulusEstimate& est) {
  return json{{"modulus", est.modulus},
              {"flux", est.flux},
              {"boundary_residual_max", est.boundary_residual_max},
              {"charge_count", est.charge_count},
              {"flagged", est.flagged}};
}

/// Trigonometric fits of the boundary images f(|z|=1) and f(|z|=rho).
struct TargetGeometry {
  JordanCurve outer;
  JordanCurve inner;
  ModulusEstimate modulus;
  double area = 0.0;
};

TargetGeometry target_geometry(const HarmonicMap& map) {
  const int n = std::max(4 * map.modes(), 64);
  std::vector<Complex> outer_pts(static_cast<size_t>(n)), inner_pts(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    outer_pts[static_cast<size_t>(j)] = map.evaluate(std::polar(1.0, t));
    inner_pts[static_cast<size_t>(j)] = map.evaluate(std::polar(map.rho(), t));
  }
  TargetGeometry geo{.outer = curve_from_points(outer_pts, map.modes()),
                     .inner = curve_from_points(inner_pts, map.modes())};
  geo.modulus = compute_modulus(geo.outer, geo.inner);
  geo.area = enclosed_area(geo.outer) - enclosed_area(geo.inner);
  return geo;
}

json hopf_report_json(const HarmonicMap& map, const TargetGeometry& geo) {
  const HopfReport report =
      make_hopf_report(map, map.source().modulus(), geo.modulus.modulus, geo.area);
  return json{{"c_fit", report.fit.c_fit},
              {"c_imag", report.fit.c_imag},
              {"residual_max", report.fit.residual_max},
              {"boundary_reality_max", report.fit.boundary_reality_max},
              {"sign_class", sign_class_name(report.sign_class)},
              {"consistent", report.consistent},
              {"mod_source", report.mod_source},
              {"mod_target", report.mod_target},
              {"kkprime_slack_min", report.kkprime_slack_min},
              {"energy_bound_slack", report.energy_bound_slack}};
}

int run_annulus_exact(double r, double R, const std::string& out_path) {
  Timer timer;
  const AnnulusPair pair(r, R);
  const HarmonicMap map = nitsche_minimizer(pair);
  const NitscheBound bound = nitsche_bound(pair);

  json doc = map_json(map);
  doc["meta"] = json{{"c", nitsche_c(pair)},
                     {"energy", nitsche_energy(pair)},
                     {"diffeomorphic_minimizer_exists", bound.diffeomorphic_minimizer_exists},
                     {"critical", bound.critical},
                     {"threshold", bound.threshold},
                     {"r", r},
                     {"R", R},
                     {"total_s", timer.seconds()}};
  emit(doc, out_path);
  return 0;
}

int run_modulus(const std::string& outer_path, const std::string& inner_path, int charges,
                int collocation, const std::string& out_path) {
  Timer timer;
  const std::string outer_text = read_text_file(outer_path);
  const std::string inner_text = read_text_file(inner_path);
  const JordanCurve outer = curve_from_json(outer_text);
  const JordanCurve inner = curve_from_json(inner_text);
  const ModulusEstimate est = compute_modulus(outer, inner, charges, collocation);

  json config{{"outer", outer_path},
              {"inner", inner_path},
              {"charges_per_curve", charges},
              {"collocation_per_curve", collocation}};
  emit(envelope("modulus", config, modulus_json(est), timer.seconds(),
                fnv1a_hex(outer_text + inner_text)),
       out_path);
  return 0;
}

int run_minimize(const std::string& config_path, const std::string& out_path, bool swap_flag) {
  Timer timer;
  const std::string text = read_text_file(config_path);
  ProblemConfig config = problem_from_json(text);
  if (swap_flag) config.swap_boundaries = !config.swap_boundaries;

  MinimizationResult result = minimize(config.problem);
  // The swapped boundary assignment (unit circle onto the inner boundary) is
  // the standard solution precomposed with the inversion rho/z, which
  // exchanges the boundary circles at equal energy.
  if (config.swap_boundaries) {
    result.map = precompose_inversion(result.map);
    result.jacobian_min =
        jacobian_scan(result.map, defaults::jacobian_grid_radial, defaults::jacobian_grid_angular);
  }

  json res;
  res["map"] = map_json(result.map);
  res["energy"] = result.energy;
  res["energy_history"] = result.energy_history;
  res["converged"] = result.converged;
  res["iterations"] = result.iterations;
  res["jacobian_min"] = result.jacobian_min;
  res["outer_reparam"] = reparam_json(result.outer_reparam);
  res["inner_reparam"] = reparam_json(result.inner_reparam);
  res["energy_lower_bound_slack"] = energy_bound_check(
      result.map, enclosed_area(config.problem.outer_curve) -
                      enclosed_area(config.problem.inner_curve));
  if (!config.label.empty()) res["label"] = config.label;

  emit(envelope("minimize", json::parse(problem_to_json(config, 0)), res, timer.seconds(),
                fnv1a_hex(text)),
       out_path);
  return 0;
}

int run_hopf(const std::string& map_path, const std::string& report_path) {
  Timer timer;
  const std::string text = read_text_file(map_path);
  const HarmonicMap map = map_from_json(text);
  const TargetGeometry geo = target_geometry(map);

  json config{{"map", map_path}};
  emit(envelope("hopf", config, hopf_report_json(map, geo), timer.seconds(), fnv1a_hex(text)),
       report_path);
  return 0;
}

int run_lift(const std::string& map_path, double c_flag, bool c_given, const std::string& res,
             const std::string& out_path) {
  Timer timer;
  const std::string text = read_text_file(map_path);
  const HarmonicMap map = map_from_json(text);

  int radial = defaults::lift_radial, angular = defaults::lift_angular;
  if (!res.empty()) {
    const auto x = res.find('x');
    size_t used_r = 0, used_a = 0;
    try {
      radial = std::stoi(res.substr(0, x), &used_r);
      angular = std::stoi(res.substr(x + 1), &used_a);
    } catch (const std::exception&) {
      used_r = 0;
    }
    if (x == std::string::npos || used_r != x || used_a != res.size() - x - 1)
      fail(ErrorCode::invalid_argument, "--res expects RADIALxANGULAR, e.g. 64x256");
  }

  const double c = c_given ? c_flag : fit_hopf_constant(map).c_fit;
  const LiftedSurface surface = lift(map, c, radial, angular);
  export_obj(surface, std::filesystem::path(out_path));

  double x3_min = surface.vertices.empty() ? 0.0 : surface.vertices[0][2];
  double x3_max = x3_min;
  double residual = 0.0;
  for (size_t i = 0; i < surface.vertices.size(); ++i) {
    x3_min = std::min(x3_min, surface.vertices[i][2]);
    x3_max = std::max(x3_max, surface.vertices[i][2]);
    residual = std::max(residual, surface.per_vertex_null_residual[i]);
  }
  json summary{{"kind", lift_kind_name(surface.kind)},
               {"c", c},
               {"vertices", surface.vertices.size()},
               {"faces", surface.faces.size()},
               {"x3_min", x3_min},
               {"x3_max", x3_max},
               {"per_vertex_null_residual_max", residual},
               {"obj", out_path},
               {"total_s", timer.seconds()}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& map_path, const std::string& report_path, double c_flag,
               bool c_given, double alpha) {
  Timer timer;
  const std::string text = read_text_file(map_path);
  const HarmonicMap map = map_from_json(text);
  const TargetGeometry geo = target_geometry(map);

  const HopfFit fit = fit_hopf_constant(map);
  const double c = c_given ? c_flag : fit.c_fit;
  const double kprime = 2.0 * std::abs(c) / (map.rho() * map.rho());

  json hopf = hopf_report_json(map, geo);

  RegularityReport probe;
  const auto levels = lipschitz_levels(map, defaults::lipschitz_rings);
  probe.lipschitz_sup = levels.back();
  probe.lipschitz_final_increment =
      levels.size() > 1 ? levels.back() - levels[levels.size() - 2] : 0.0;
  probe.outer_fit = boundary_holder_fit(map, BoundarySide::outer);
  probe.inner_fit = boundary_holder_fit(map, BoundarySide::inner);
  probe.predicted_exponent =
      kellogg_prediction(alpha, map.source().modulus(), geo.modulus.modulus);

  // Length-area slack over 8 points per boundary circle.
  probe.length_area_slack_min = std::numeric_limits<double>::infinity();
  const double r_max = 0.5 * (1.0 - map.rho());
  for (int j = 0; j < 8; ++j) {
    const double t = 2.0 * std::numbers::pi * j / 8;
    for (const double radius : {1.0, map.rho()}) {
      probe.length_area_slack_min = std::min(
          probe.length_area_slack_min,
          length_area_check(map, std::polar(radius, t), r_max, defaults::length_area_steps,
                            1.0, kprime));
    }
  }

  json reg;
  reg["lipschitz_sup"] = probe.lipschitz_sup;
  reg["lipschitz_final_increment"] = probe.lipschitz_final_increment;
  reg["outer_holder"] = holder_json(probe.outer_fit);
  reg["inner_holder"] = holder_json(probe.inner_fit);
  reg["predicted_exponent"] = probe.predicted_exponent;
  reg["length_area_slack_min"] = probe.length_area_slack_min;
  reg["alpha"] = alpha;

  json res;
  res["hopf"] = std::move(hopf);
  res["regularity"] = std::move(reg);
  res["energy"] = map.dirichlet_energy();
  res["target_area"] = geo.area;
  res["target_modulus"] = modulus_json(geo.modulus);

  json config{{"map", map_path}, {"alpha", alpha}};
  if (c_given) config["c"] = c_flag;
  emit(envelope("verify", config, res, timer.seconds(), fnv1a_hex(text)), report_path);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"energy-minimizing harmonic maps between ring domains"};
  app.require_subcommand(1);

  // annulus-exact
  double r = 0.5, R = 0.5;
  std::string out_path;
  auto* exact = app.add_subcommand("annulus-exact", "closed-form round-annulus minimizer");
  exact->add_option("--r", r, "source inner radius in (0,1)")->required();
  exact->add_option("--R", R, "target inner radius in (0,1)")->required();
  exact->add_option("--out", out_path, "output map JSON path (stdout if omitted)");

  // minimize
  std::string config_path, min_out;
  bool swap_flag = false;
  auto* mini = app.add_subcommand("minimize", "energy descent from a problem JSON");
  mini->add_option("--config", config_path, "problem JSON")->required();
  mini->add_option("--out", min_out, "result JSON path (stdout if omitted)");
  mini->add_flag("--swap", swap_flag, "swap which target boundary the unit circle maps to");

  // modulus
  std::string outer_path, inner_path, mod_out;
  int charges = defaults::modulus_charges;
  int collocation = defaults::modulus_collocation;
  auto* mod = app.add_subcommand("modulus", "conformal modulus of a ring domain");
  mod->add_option("--outer", outer_path, "outer curve JSON")->required();
  mod->add_option("--inner", inner_path, "inner curve JSON")->required();
  mod->add_option("--charges", charges, "fundamental solutions per curve");
  mod->add_option("--collocation", collocation, "collocation points per curve");
  mod->add_option("--out", mod_out, "report path (stdout if omitted)");

  // hopf
  std::string map_path, hopf_out;
  auto* hopf = app.add_subcommand("hopf", "Hopf-differential fit and audits");
  hopf->add_option("--map", map_path, "harmonic map JSON")->required();
  hopf->add_option("--report", hopf_out, "report path (stdout if omitted)");

  // lift
  std::string lift_map, lift_out = "surface.obj", lift_res;
  double c_flag = 0.0;
  auto* lft = app.add_subcommand("lift", "minimal-surface lift to OBJ");
  lft->add_option("--map", lift_map, "harmonic map JSON")->required();
  auto* c_opt = lft->add_option("--c", c_flag, "Hopf constant (fitted if omitted)");
  lft->add_option("--out", lift_out, "OBJ output path");
  lft->add_option("--res", lift_res, "mesh resolution RADIALxANGULAR (default 64x256)");

  // verify
  std::string verify_map, verify_out;
  double alpha = defaults::default_alpha;
  double verify_c = 0.0;
  auto* ver = app.add_subcommand("verify", "consolidated verification report");
  ver->add_option("--map", verify_map, "harmonic map JSON")->required();
  ver->add_option("--report", verify_out, "report path (stdout if omitted)");
  auto* vc_opt = ver->add_option("--c", verify_c, "Hopf constant (fitted if omitted)");
  ver->add_option("--alpha", alpha, "boundary smoothness exponent in (0,1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exact->parsed()) return run_annulus_exact(r, R, out_path);
    if (mini->parsed()) return run_minimize(config_path, min_out, swap_flag);
    if (mod->parsed()) return run_modulus(outer_path, inner_path, charges, collocation, mod_out);
    if (hopf->parsed()) return run_hopf(map_path, hopf_out);
    if (lft->parsed()) return run_lift(lift_map, c_flag, c_opt->count() > 0, lift_res, lift_out);
    if (ver->parsed())
      return run_verify(verify_map, verify_out, verify_c, vc_opt->count() > 0, alpha);
  } catch (const Error& err) {
    json out{{"error", {{"code", error_code_name(err.code())}, {"message", err.what()}}}};
    std::cerr << out.dump(2) << "\n";
    return error_exit_status(err.code());
  } catch (const std::exception& err) {
    json out{{"error", {{"code", "E_INTERNAL"}, {"message", err.what()}}}};
    std::cerr << out.dump(2) << "\n";
    return 1;
  }
  return 0;
}
