#include "ale/jsonio.hpp"

#include <fstream>
#include <iostream>

#include "ale/errors.hpp"

namespace ale {

const Json& get_field(const Json& j, const std::string& name) {
  if (!j.is_object()) throw SchemaError("expected an object around field '" + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError("missing field '" + name + "'");
  return *it;
}

namespace {

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError("field '" + where + "' must be a number");
  return j.get<double>();
}

long integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError("field '" + where + "' must be an integer");
  return j.get<long>();
}

std::vector<double> real_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError("field '" + where + "' must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

long require_integer(const Json& j, const std::string& name) {
  return integer_at(get_field(j, name), name);
}

Json complex_to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw SchemaError("field '" + where + "' must be [re, im] or a number");
  return Cplx(number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]"));
}

Json germ_to_json(const CoefficientGerm& g) {
  Json coeffs = Json::array();
  for (const Poly& p : g.a) {
    Json row = Json::array();
    for (Cplx c : p) row.push_back(complex_to_json(c));
    coeffs.push_back(row);
  }
  return Json{{"type", "Ak"}, {"k", g.k}, {"coeffs", coeffs}};
}

CoefficientGerm germ_from_json(const Json& j) {
  const Json& type = get_field(j, "type");
  if (!type.is_string() || type.get<std::string>() != "Ak")
    throw SchemaError("field 'type' must be \"Ak\"");
  CoefficientGerm g;
  g.k = int(integer_at(get_field(j, "k"), "k"));
  const Json& coeffs = get_field(j, "coeffs");
  if (!coeffs.is_array()) throw SchemaError("field 'coeffs' must be an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Json& row = coeffs[i];
    std::string where = "coeffs[" + std::to_string(i) + "]";
    if (!row.is_array()) throw SchemaError("field '" + where + "' must be an array");
    Poly p;
    for (std::size_t q = 0; q < row.size(); ++q)
      p.push_back(complex_from_json(row[q], where + "[" + std::to_string(q) + "]"));
    g.a.push_back(p);
  }
  g.validate();
  return g;
}

Json parameter_to_json(const DeformationParameter& p) {
  Json zr = Json::array(), zc = Json::array();
  for (double x : p.zeta_r) zr.push_back(x);
  for (Cplx x : p.zeta_c) zc.push_back(complex_to_json(x));
  return Json{{"kind", to_string(p.kind)}, {"rank", p.rank}, {"zeta_r", zr}, {"zeta_c", zc}};
}

DeformationParameter parameter_from_json(const Json& j) {
  DeformationParameter p;
  const Json& kind = get_field(j, "kind");
  if (!kind.is_string()) throw SchemaError("field 'kind' must be a string");
  p.kind = root_kind_from_string(kind.get<std::string>());
  p.rank = int(integer_at(get_field(j, "rank"), "rank"));
  p.zeta_r = real_vector(get_field(j, "zeta_r"), "zeta_r");
  const Json& zc = get_field(j, "zeta_c");
  if (!zc.is_array()) throw SchemaError("field 'zeta_c' must be an array");
  for (std::size_t i = 0; i < zc.size(); ++i)
    p.zeta_c.push_back(complex_from_json(zc[i], "zeta_c[" + std::to_string(i) + "]"));
  if (p.zeta_r.size() != p.zeta_c.size())
    throw SchemaError("fields 'zeta_r' and 'zeta_c' must have equal length");
  return p;
}

Json gh_config_to_json(const GHConfig& cfg) {
  Json pts = Json::array();
  for (const Vec3& p : cfg.points) pts.push_back(Json::array({p[0], p[1], p[2]}));
  Json dir = Json::array(
      {cfg.string_direction[0], cfg.string_direction[1], cfg.string_direction[2]});
  return Json{{"points", pts}, {"string_direction", dir}, {"fiber_period", cfg.fiber_period}};
}

GHConfig gh_config_from_json(const Json& j) {
  const Json& pts = get_field(j, "points");
  if (!pts.is_array()) throw SchemaError("field 'points' must be an array");
  std::vector<Vec3> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<double> v = real_vector(pts[i], "points[" + std::to_string(i) + "]");
    if (v.size() != 3)
      throw SchemaError("field 'points[" + std::to_string(i) + "]' must have 3 entries");
    points.push_back({v[0], v[1], v[2]});
  }
  std::optional<Vec3> dir;
  if (j.contains("string_direction")) {
    std::vector<double> v = real_vector(j["string_direction"], "string_direction");
    if (v.size() != 3) throw SchemaError("field 'string_direction' must have 3 entries");
    dir = Vec3{v[0], v[1], v[2]};
  }
  GHConfig cfg = make_gh_config(points, dir);
  if (j.contains("fiber_period")) {
    cfg.fiber_period = number_at(j["fiber_period"], "fiber_period");
    if (!(cfg.fiber_period > 0)) throw SchemaError("field 'fiber_period' must be positive");
  }
  return cfg;
}

Json polygon_config_to_json(const PolygonConfig& pc) {
  Json polys = Json::array();
  for (const PolygonSpec& p : pc.polygons)
    polys.push_back(Json{{"height", p.height}, {"radius", p.radius}, {"phase", p.phase}});
  return Json{{"d", pc.d}, {"n", pc.n}, {"m", pc.m}, {"polygons", polys}};
}

PolygonConfig polygon_config_from_json(const Json& j) {
  int d = int(integer_at(get_field(j, "d"), "d"));
  int n = int(integer_at(get_field(j, "n"), "n"));
  long m = integer_at(get_field(j, "m"), "m");
  const Json& polys = get_field(j, "polygons");
  if (!polys.is_array()) throw SchemaError("field 'polygons' must be an array");
  std::vector<PolygonSpec> specs;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Json& p = polys[i];
    std::string where = "polygons[" + std::to_string(i) + "]";
    PolygonSpec s;
    s.height = number_at(get_field(p, "height"), where + ".height");
    s.radius = number_at(get_field(p, "radius"), where + ".radius");
    s.phase = number_at(get_field(p, "phase"), where + ".phase");
    specs.push_back(s);
  }
  return build_polygon_config(d, n, m, specs);
}

Json lifted_germ_to_json(const LiftedGerm& lg) {
  Json series = Json::array();
  for (const CartanVecC& coeff : lg.series) {
    Json row = Json::array();
    for (Cplx c : coeff) row.push_back(complex_to_json(c));
    series.push_back(row);
  }
  Json mono = Json::array();
  for (int p : lg.monodromy) mono.push_back(p);
  return Json{{"kind", to_string(lg.rs.kind)},
              {"rank", lg.rs.rank},
              {"cover_order", lg.cover_order},
              {"monodromy", mono},
              {"loop_radius", lg.loop_radius},
              {"sample_radius", lg.sample_radius},
              {"series", series}};
}

Json tangent_graviton_to_json(const TangentGraviton& tg) {
  Json zr = Json::array(), zc = Json::array();
  for (double x : tg.zeta_dot_r) zr.push_back(x);
  for (Cplx x : tg.zeta_dot_c) zc.push_back(complex_to_json(x));
  return Json{{"p", tg.p},
              {"epsilon_exponent", tg.epsilon_exponent},
              {"smooth", tg.smooth},
              {"zeta_dot_r", zr},
              {"zeta_dot_c", zc}};
}

Json classification_to_json(const Classification& c, const RootSystem& rs) {
  Json verdicts = Json::array();
  for (const RootVerdict& v : c.verdicts) {
    Json root = Json::array();
    for (const Rational& x : rs.positive_roots[v.root_index])
      root.push_back(x.convert_to<double>());
    verdicts.push_back(Json{{"root", root},
                            {"lagrangian", v.lagrangian},
                            {"holomorphic", v.holomorphic},
                            {"wall_violation", v.wall_violation},
                            {"primitive_lagrangian", v.primitive_lagrangian},
                            {"primitive_holomorphic", v.primitive_holomorphic}});
  }
  return Json{{"smooth", c.smooth}, {"verdicts", verdicts}};
}

Json quotient_verdict_to_json(const QuotientSphereVerdict& v) {
  Json coeffs = Json::array();
  for (double c : v.class_coeffs) coeffs.push_back(c);
  return Json{{"a", v.a},
              {"b", v.b},
              {"shape", to_string(v.shape)},
              {"nonzero_class", v.nonzero_class},
              {"class_coeffs", coeffs},
              {"detail", v.detail}};
}

Json tsingularity_to_json(const TSingularity& t) {
  Json out{{"r", t.r}, {"q", t.q}, {"label", t.describe()}};
  switch (t.kind) {
    case TSingularity::Kind::RDP_A:
      out["kind"] = "RDP_A";
      break;
    case TSingularity::Kind::ClassT:
      out["kind"] = "ClassT";
      out["d"] = t.d;
      out["n"] = t.n;
      out["a"] = t.a;
      break;
    case TSingularity::Kind::NotClassT:
      out["kind"] = "NotClassT";
      break;
  }
  return out;
}

Json inventory_to_json(const std::vector<FixedPointEntry>& inv) {
  Json out = Json::array();
  for (const FixedPointEntry& e : inv) {
    Json entry{{"chart", Json::array({e.chart[0], e.chart[1]})},
               {"stabilizer", e.stabilizer},
               {"weights", Json::array({e.weights[0], e.weights[1]})},
               {"isolated", e.isolated},
               {"label", e.label}};
    if (e.isolated) {
      entry["q"] = e.q;
      entry["type"] = tsingularity_to_json(e.type);
    }
    out.push_back(entry);
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw SchemaError("JSON parse failure in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open output file '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace ale
