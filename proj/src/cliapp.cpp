#include "ale/cliapp.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ale/classify.hpp"
#include "ale/conic.hpp"
#include "ale/delpezzo.hpp"
#include "ale/errors.hpp"
#include "ale/germ.hpp"
#include "ale/gh.hpp"
#include "ale/jsonio.hpp"
#include "ale/znquot.hpp"

namespace ale {

namespace {

struct CommonOpts {
  std::string input;
  std::string out = "-";
  std::string csv;
  double tol = 1e-9;
  int samples = 0;
  double step = 0;
  std::uint64_t seed = 1;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
  auto* in = cmd->add_option("--input", o.input, "input JSON file");
  if (needs_input) in->required();
  cmd->add_option("--out", o.out, "output path, '-' for stdout");
  cmd->add_option("--tol", o.tol, "tolerance override");
  cmd->add_option("--samples", o.samples, "sample count");
  cmd->add_option("--step", o.step, "finite-difference step");
  cmd->add_option("--seed", o.seed, "seed for randomized sweeps");
  cmd->add_flag("--quiet", o.quiet, "suppress stdout report");
}

void emit(const CommonOpts& o, Json report) {
  if (!o.out.empty() && o.out != "-") write_json_file(o.out, report);
  if (!o.quiet && (o.out.empty() || o.out == "-")) write_json_file("-", report);
}

Json report_head(const std::string& command, const CommonOpts& o) {
  return Json{{"version", kVersion}, {"command", command}, {"seed", o.seed}};
}

LiftOptions lift_options(const CommonOpts& o) {
  LiftOptions lo;
  if (o.tol > 0) lo.tol = std::min(o.tol, 1e-6);
  if (o.samples > 0) lo.n_steps = o.samples;
  if (o.step > 0) lo.loop_radius = o.step;
  return lo;
}

int cmd_check_nondegenerate(const CommonOpts& o) {
  CoefficientGerm g = germ_from_json(load_json_file(o.input));
  LiftOptions lo = lift_options(o);
  LiftedGerm lg = lift_Ak_germ_auto(g, lo);
  double tol = o.tol > 0 ? o.tol : 1e-8;
  Json rep = report_head("check-nondegenerate", o);
  rep["tolerances"] = Json{{"wall_tol", tol}, {"lift_tol", lo.tol}};
  rep["cover_order"] = lg.cover_order;
  rep["def11"] = check_nondegenerate_def11(lg, tol);
  rep["def12"] = check_nondegenerate_def12(lg, -1, tol);
  rep["round_trip_residual"] = lift_round_trip_residual(g, lg);
  emit(o, rep);
  return 0;
}

int cmd_tangent_graviton(const CommonOpts& o) {
  CoefficientGerm g = germ_from_json(load_json_file(o.input));
  LiftOptions lo = lift_options(o);
  LiftedGerm lg = lift_Ak_germ_auto(g, lo);
  double tol = o.tol > 0 ? o.tol : 1e-8;
  TangentGraviton tg = tangent_graviton(lg, tol);
  Json rep = report_head("tangent-graviton", o);
  rep["tolerances"] = Json{{"wall_tol", tol}, {"lift_tol", lo.tol}};
  rep["lift"] = lifted_germ_to_json(lg);
  rep["tangent"] = tangent_graviton_to_json(tg);
  emit(o, rep);
  return 0;
}

int cmd_classify_roots(const CommonOpts& o) {
  Json in = load_json_file(o.input);
  double tol = o.tol > 0 ? o.tol : 1e-9;
  DeformationParameter p;
  Json rep = report_head("classify-roots", o);
  if (in.is_object() && in.contains("type")) {
    CoefficientGerm g = germ_from_json(in);
    LiftedGerm lg = lift_Ak_germ_auto(g, lift_options(o));
    TangentGraviton tg = tangent_graviton(lg, std::max(tol, 1e-10));
    p.kind = lg.rs.kind;
    p.rank = lg.rs.rank;
    p.zeta_r = tg.zeta_dot_r;
    p.zeta_c = tg.zeta_dot_c;
    rep["source"] = "germ";
    rep["tangent"] = tangent_graviton_to_json(tg);
  } else {
    p = parameter_from_json(in);
    rep["source"] = "parameter";
  }
  RootSystem rs = build_root_system(p.kind, p.rank);
  Classification c = classify_roots(rs, p, tol);
  rep["tolerances"] = Json{{"wall_tol", tol}};
  rep["classification"] = classification_to_json(c, rs);
  emit(o, rep);
  return 0;
}

const char* kOmegaNames[3] = {"omega1", "omega2", "omega3"};

double closedness_for(const GHConfig& cfg, const std::string& name, int samples, double h,
                      std::uint64_t seed) {
  TwoFormField f;
  if (name.rfind("omega", 0) == 0) {
    int axis = name[5] - '1';
    Vec3 xi{0, 0, 0};
    xi[axis] = 1.0;
    f = [cfg, xi](const R4& x) { return kahler_form(cfg, xi, x); };
  } else {
    int i = std::stoi(name.substr(3));
    f = [cfg, i](const R4& x) { return chi_form(cfg, i, x); };
  }
  return verify_closed(cfg, f, samples, h, seed).max_residual;
}

int cmd_gh_verify(const CommonOpts& o) {
  GHConfig cfg = gh_config_from_json(load_json_file(o.input));
  int samples = o.samples > 0 ? o.samples : 50;
  double h = o.step > 0 ? o.step : 1e-4;

  Json rep = report_head("gh-verify", o);
  rep["tolerances"] = Json{{"fd_step", h}, {"samples", samples}};

  double alg = 0, quat = 0, omega_match = 0, star = 0, chi_sum = 0, det_res = 0;
  std::vector<R4> pts = sample_points(cfg, samples, o.seed, 0.25);
  Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const R4& x : pts) {
    Eigen::Matrix4d g = metric(cfg, x);
    Eigen::Matrix4d I[3], W[3];
    for (int a = 0; a < 3; ++a) {
      I[a] = complex_structure(cfg, axes[a], x);
      W[a] = kahler_form(cfg, axes[a], x);
      alg = std::max(alg, (I[a] * I[a] + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff());
      omega_match = std::max(omega_match, (W[a] - I[a].transpose() * g).cwiseAbs().maxCoeff());
      star = std::max(star, (hodge_star2(cfg, x, W[a]) - W[a]).cwiseAbs().maxCoeff());
      alg = std::max(alg, (I[a].transpose() * g * I[a] - g).cwiseAbs().maxCoeff());
    }
    quat = std::max(quat, (I[0] * I[1] - I[2]).cwiseAbs().maxCoeff());
    quat = std::max(quat, (I[1] * I[2] - I[0]).cwiseAbs().maxCoeff());
    quat = std::max(quat, (I[2] * I[0] - I[1]).cwiseAbs().maxCoeff());
    Eigen::Matrix4d cs = Eigen::Matrix4d::Zero();
    for (int i = 0; i < int(cfg.points.size()); ++i) {
      Eigen::Matrix4d chi = chi_form(cfg, i, x);
      cs += chi;
      star = std::max(star, (hodge_star2(cfg, x, chi) + chi).cwiseAbs().maxCoeff());
    }
    chi_sum = std::max(chi_sum, cs.cwiseAbs().maxCoeff());
    Vec3 x3{x[0], x[1], x[2]};
    double V = potential(cfg, x3);
    det_res = std::max(det_res, std::abs(g.determinant() - V * V));
  }
  rep["identity_residuals"] = Json{{"complex_structures", alg},
                                   {"quaternion", quat},
                                   {"omega_vs_metric", omega_match},
                                   {"hodge_star", star},
                                   {"chi_sum", chi_sum},
                                   {"metric_determinant", det_res}};

  Json closed = Json::object();
  std::vector<std::string> names;
  for (const char* n : kOmegaNames) names.push_back(n);
  for (int i = 0; i < int(cfg.points.size()); ++i) names.push_back("chi" + std::to_string(i));
  for (const std::string& n : names)
    closed[n] = closedness_for(cfg, n, samples, h, o.seed);
  rep["closedness_residuals"] = closed;

  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw SchemaError("cannot open CSV output '" + o.csv + "'");
    f << "form,step,max_residual\n";
    for (const std::string& n : names)
      for (double hh : {4 * h, 2 * h, h})
        f << n << "," << hh << "," << closedness_for(cfg, n, samples, hh, o.seed) << "\n";
  }
  emit(o, rep);
  return 0;
}

int cmd_gh_periods(const CommonOpts& o) {
  GHConfig cfg = gh_config_from_json(load_json_file(o.input));
  int n_quad = o.samples > 0 ? o.samples : 64;
  Json rep = report_head("gh-periods", o);
  rep["tolerances"] = Json{{"quadrature_order", n_quad}};
  Json list = Json::array();
  int n = int(cfg.points.size());
  Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SegmentSphere s{a, b};
      try {
        validate_sphere(cfg, s);
      } catch (const NumericsError&) {
        continue;
      }
      for (int i = 0; i < n; ++i)
        list.push_back(Json{{"segment", Json::array({a, b})},
                            {"form", "chi" + std::to_string(i)},
                            {"value", pairing_chi(cfg, i, s, n_quad)}});
      for (int j = 0; j < 3; ++j)
        list.push_back(Json{{"segment", Json::array({a, b})},
                            {"form", kOmegaNames[j]},
                            {"value", pairing_omega(cfg, axes[j], s, n_quad)}});
    }
  rep["periods"] = list;
  emit(o, rep);
  return 0;
}

int cmd_gh_curvature(const CommonOpts& o, bool richardson) {
  GHConfig cfg = gh_config_from_json(load_json_file(o.input));
  int samples = o.samples > 0 ? o.samples : 20;
  double h = o.step > 0 ? o.step : 1e-3;
  Json rep = report_head("gh-curvature", o);
  rep["tolerances"] = Json{{"fd_step", h}, {"samples", samples}, {"richardson", richardson}};
  CurvatureReport cr = curvature_sweep(cfg, samples, h, richardson, o.seed);
  rep["max_abs_scalar"] = cr.max_abs_scalar;
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw SchemaError("cannot open CSV output '" + o.csv + "'");
    f << "step,max_abs_scalar\n";
    for (double hh : {8 * h, 4 * h, 2 * h, h})
      f << hh << "," << curvature_sweep(cfg, samples, hh, richardson, o.seed).max_abs_scalar
        << "\n";
  }
  emit(o, rep);
  return 0;
}

int cmd_zn_classify(const CommonOpts& o) {
  Json in = load_json_file(o.input);
  PolygonConfig pc = polygon_config_from_json(in);
  double tol = o.tol > 0 ? o.tol : 1e-9;
  Json rep = report_head("zn-classify", o);
  rep["tolerances"] = Json{{"tol", tol}};
  rep["invariant_cohomology_dim"] = invariant_cohomology_dim(pc);
  if (in.contains("segment")) {
    const Json& seg = in["segment"];
    if (!seg.is_array() || seg.size() != 2)
      throw SchemaError("field 'segment' must be [a, b]");
    QuotientSphereVerdict v =
        classify_quotient_sphere(pc, seg[0].get<int>(), seg[1].get<int>(), tol);
    rep["verdict"] = quotient_verdict_to_json(v);
    rep["shape"] = to_string(v.shape);
  } else {
    Json list = Json::array();
    int total = pc.d * pc.n;
    for (int a = 0; a < total; ++a)
      for (int b = a + 1; b < total; ++b)
        list.push_back(quotient_verdict_to_json(classify_quotient_sphere(pc, a, b, tol)));
    rep["verdicts"] = list;
  }
  emit(o, rep);
  return 0;
}

int cmd_invariant_dims(const CommonOpts& o) {
  Json in = load_json_file(o.input);
  long d = require_integer(in, "d");
  long n = require_integer(in, "n");
  InvariantDims dims = invariant_parameter_dims(d, n);
  Json rep = report_head("invariant-dims", o);
  rep["complex_dim"] = dims.complex_dim;
  rep["real_dim"] = dims.real_dim;
  if (in.contains("polygons")) {
    PolygonConfig pc = polygon_config_from_json(in);
    rep["invariant_cohomology_dim"] = invariant_cohomology_dim(pc);
  }
  emit(o, rep);
  return 0;
}

int cmd_conic(const CommonOpts& o, const std::vector<double>& e1, const std::vector<double>& e2) {
  auto mk = [](const std::vector<double>& v, const char* name) {
    if (v.empty() || v.size() > 2)
      throw SchemaError(std::string("option '") + name + "' takes RE [IM]");
    return Cx(v[0], v.size() > 1 ? v[1] : 0.0);
  };
  Cx eps1 = mk(e1, "--eps1"), eps2 = mk(e2, "--eps2");
  Json rep = report_head("conic", o);
  DegenerateFibers df = degenerate_fibers(eps1, eps2);
  Json xs = Json::array();
  for (Cx x : df.x) xs.push_back(complex_to_json(x));
  rep["degenerate_fibers"] = xs;
  rep["double_value"] = df.double_value;
  rep["singular_total_space"] = df.singular_total_space;
  rep["nondegenerate_line"] = nondegenerate_line(eps1, eps2);

  Json splits = Json::array();
  for (Cx x : df.x) {
    SplitFiber sf = split_degenerate_fiber(eps1, eps2, x);
    auto form = [](const LinearForm& l) {
      return Json::array({complex_to_json(l.c_alpha), complex_to_json(l.c_beta),
                          complex_to_json(l.c_gamma)});
    };
    splits.push_back(Json{{"x", complex_to_json(x)},
                          {"l1", form(sf.l1)},
                          {"l2", form(sf.l2)},
                          {"residual", sf.residual},
                          {"normal_crossing", sf.normal_crossing}});
  }
  rep["splits"] = splits;

  int samples = o.samples > 0 ? o.samples : 100;
  ChartCheckReport cc = invariant_chart_check(samples, o.seed);
  rep["chart_check"] = Json{{"max_residual", cc.max_residual}, {"samples", cc.samples}};
  emit(o, rep);
  return 0;
}

int cmd_inventory(const CommonOpts& o, long r, long w1, long w2) {
  if (!o.input.empty()) {
    Json in = load_json_file(o.input);
    r = require_integer(in, "r");
    w1 = require_integer(in, "w1");
    w2 = require_integer(in, "w2");
  }
  CyclicAction act{r, w1, w2};
  Json rep = report_head("inventory", o);
  rep["r"] = r;
  rep["weights"] = Json::array({w1, w2});
  rep["singularities"] = inventory_to_json(singularity_inventory(act));
  emit(o, rep);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"alekit: multi-center instanton geometry toolkit"};
  app.set_version_flag("--version", std::string("alekit ") + kVersion);
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<double> eps1, eps2;
  long inv_r = 0, inv_w1 = 0, inv_w2 = 0;
  bool richardson = false;

  auto* c_nd = app.add_subcommand("check-nondegenerate", "first-order germ criteria");
  add_common(c_nd, o, true);
  auto* c_tg = app.add_subcommand("tangent-graviton", "leading deformation coefficient");
  add_common(c_tg, o, true);
  auto* c_cr = app.add_subcommand("classify-roots", "root verdicts for a parameter or germ");
  add_common(c_cr, o, true);
  auto* c_gv = app.add_subcommand("gh-verify", "metric and form identities");
  add_common(c_gv, o, true);
  c_gv->add_option("--csv", o.csv, "residual sweep CSV");
  auto* c_gp = app.add_subcommand("gh-periods", "sphere periods of chi and omega");
  add_common(c_gp, o, true);
  auto* c_gc = app.add_subcommand("gh-curvature", "scalar curvature sweep");
  add_common(c_gc, o, true);
  c_gc->add_option("--csv", o.csv, "residual sweep CSV");
  c_gc->add_flag("--richardson", richardson, "Richardson extrapolation");
  auto* c_zn = app.add_subcommand("zn-classify", "quotient sphere verdicts");
  add_common(c_zn, o, true);
  auto* c_id = app.add_subcommand("invariant-dims", "invariant parameter dimensions");
  add_common(c_id, o, true);
  auto* c_co = app.add_subcommand("conic", "degenerate fibers of the conic family");
  add_common(c_co, o, false);
  c_co->add_option("--eps1", eps1, "first parameter: RE [IM]")->expected(1, 2)->required();
  c_co->add_option("--eps2", eps2, "second parameter: RE [IM]")->expected(1, 2)->required();
  auto* c_in = app.add_subcommand("inventory", "cyclic quotient singularities");
  add_common(c_in, o, false);
  c_in->add_option("--r", inv_r, "group order");
  c_in->add_option("--w1", inv_w1, "first weight");
  c_in->add_option("--w2", inv_w2, "second weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (c_nd->parsed()) return cmd_check_nondegenerate(o);
    if (c_tg->parsed()) return cmd_tangent_graviton(o);
    if (c_cr->parsed()) return cmd_classify_roots(o);
    if (c_gv->parsed()) return cmd_gh_verify(o);
    if (c_gp->parsed()) return cmd_gh_periods(o);
    if (c_gc->parsed()) return cmd_gh_curvature(o, richardson);
    if (c_zn->parsed()) return cmd_zn_classify(o);
    if (c_id->parsed()) return cmd_invariant_dims(o);
    if (c_co->parsed()) return cmd_conic(o, eps1, eps2);
    if (c_in->parsed()) {
      if (o.input.empty() && inv_r == 0)
        throw SchemaError("inventory needs --input or --r/--w1/--w2");
      return cmd_inventory(o, inv_r, inv_w1, inv_w2);
    }
    throw SchemaError("no subcommand selected");
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 1;
  } catch (const NumericsError& e) {
    std::cerr << "numerical rejection: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ale
