#include "ale/classify.hpp"

#include <cmath>

#include "ale/errors.hpp"

namespace ale {

namespace {

double vec_norm(const CartanVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double vec_norm(const CartanVecC& v) {
  double s = 0;
  for (auto x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

Classification classify_roots(const RootSystem& rs, const DeformationParameter& zeta,
                              double tol) {
  if (zeta.kind != rs.kind || zeta.rank != rs.rank)
    throw SchemaError("parameter does not match the root system");
  if (int(zeta.zeta_r.size()) != rs.ambient_dim || int(zeta.zeta_c.size()) != rs.ambient_dim)
    throw SchemaError("parameter dimension does not match the ambient model");

  double scale_r = std::max(vec_norm(zeta.zeta_r), 1.0);
  double scale_c = std::max(vec_norm(zeta.zeta_c), 1.0);

  std::vector<char> lag(rs.positive_roots.size()), hol(rs.positive_roots.size());
  for (std::size_t i = 0; i < rs.positive_roots_d.size(); ++i) {
    const CartanVec& th = rs.positive_roots_d[i];
    double nt = vec_norm(th);
    lag[i] = std::abs(dot(th, zeta.zeta_r)) <= tol * nt * scale_r;
    hol[i] = std::abs(dot(th, zeta.zeta_c)) <= tol * nt * scale_c;
  }

  auto is_lag = [&](const RootSystem&, int j) { return bool(lag[j]); };
  auto is_hol = [&](const RootSystem&, int j) { return bool(hol[j]); };

  Classification out;
  out.smooth = true;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    RootVerdict v;
    v.root_index = int(i);
    v.lagrangian = lag[i];
    v.holomorphic = hol[i];
    v.wall_violation = v.lagrangian && v.holomorphic;
    v.primitive_lagrangian =
        v.lagrangian && primitive_decomposition(rs, int(i), is_lag).primitive;
    v.primitive_holomorphic =
        v.holomorphic && primitive_decomposition(rs, int(i), is_hol).primitive;
    if (v.wall_violation) out.smooth = false;
    out.verdicts.push_back(v);
  }
  return out;
}

ParameterTriple to_triple(const DeformationParameter& zeta) {
  ParameterTriple t;
  t[0] = zeta.zeta_r;
  t[1].resize(zeta.zeta_c.size());
  t[2].resize(zeta.zeta_c.size());
  for (std::size_t i = 0; i < zeta.zeta_c.size(); ++i) {
    t[1][i] = zeta.zeta_c[i].real();
    t[2][i] = zeta.zeta_c[i].imag();
  }
  return t;
}

DeformationParameter from_triple(RootKind kind, int rank, const ParameterTriple& t) {
  if (t[1].size() != t[0].size() || t[2].size() != t[0].size())
    throw SchemaError("triple components must share one dimension");
  DeformationParameter zeta;
  zeta.kind = kind;
  zeta.rank = rank;
  zeta.zeta_r = t[0];
  zeta.zeta_c.resize(t[0].size());
  for (std::size_t i = 0; i < t[0].size(); ++i)
    zeta.zeta_c[i] = {t[1][i], t[2][i]};
  return zeta;
}

RotationWitness rotation_to_holomorphic(const RootSystem& rs, int theta_index,
                                        const ParameterTriple& zeta, double tol) {
  if (theta_index < 0 || theta_index >= int(rs.positive_roots_d.size()))
    throw SchemaError("root index out of range");
  const CartanVec& th = rs.positive_roots_d[theta_index];
  for (const CartanVec& z : zeta)
    if (int(z.size()) != rs.ambient_dim)
      throw SchemaError("parameter dimension does not match the ambient model");

  double scale = 1.0;
  for (const CartanVec& z : zeta) scale = std::max(scale, vec_norm(z));
  double p1 = dot(th, zeta[0]);
  if (std::abs(p1) > tol * vec_norm(th) * scale)
    throw NumericsError("root is not Lagrangian for the first component");

  double p2 = dot(th, zeta[1]);
  double p3 = dot(th, zeta[2]);
  // xi_c = zeta_1 + i (sin phi zeta_2 + cos phi zeta_3); kill the imaginary pairing.
  double phi = std::atan2(-p3, p2);
  double c = std::cos(phi), s = std::sin(phi);

  RotationWitness w;
  w.phi = phi;
  w.u = {{{0.0, -c, s}, {1.0, 0.0, 0.0}, {0.0, s, c}}};
  for (int i = 0; i < 3; ++i) {
    w.xi[i].assign(rs.ambient_dim, 0.0);
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < rs.ambient_dim; ++a)
        w.xi[i][a] += w.u[i][j] * zeta[j][a];
  }
  return w;
}

ScaledParameter scale_parameter(std::complex<double> lambda, const DeformationParameter& zeta) {
  if (lambda == std::complex<double>(0.0, 0.0))
    throw SchemaError("scaling parameter must be nonzero");
  ScaledParameter out;
  out.param = zeta;
  double a2 = std::norm(lambda);
  for (double& x : out.param.zeta_r) x *= a2;
  for (auto& x : out.param.zeta_c) x *= lambda * lambda;
  out.metric_factor = 1.0 / a2;
  return out;
}

ParameterTriple gh_parameter_triple(const GHConfig& cfg) {
  int n = int(cfg.points.size());
  ParameterTriple t;
  for (int j = 0; j < 3; ++j) {
    t[j].resize(n);
    double mean = 0;
    for (int i = 0; i < n; ++i) mean += cfg.points[i][j];
    mean /= n;
    for (int i = 0; i < n; ++i) t[j][i] = cfg.points[i][j] - mean;
  }
  return t;
}

DeformationParameter gh_deformation_parameter(const GHConfig& cfg) {
  int n = int(cfg.points.size());
  if (n < 2) throw SchemaError("need at least two centers for a root system");
  return from_triple(RootKind::A, n - 1, gh_parameter_triple(cfg));
}

std::vector<SphereModel> sphere_inventory_A(const GHConfig& cfg, double tol) {
  int n = int(cfg.points.size());
  if (n < 2) return {};
  RootSystem rs = build_root_system(RootKind::A, n - 1);

  // positive root e_a - e_b (a < b) located by exact coordinates
  auto root_index_of = [&](int a, int b) {
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
      const RatVec& r = rs.positive_roots[i];
      bool match = true;
      for (int c = 0; c < n; ++c) {
        Rational want = (c == a) ? 1 : (c == b) ? -1 : 0;
        if (r[c] != want) {
          match = false;
          break;
        }
      }
      if (match) return int(i);
    }
    throw NumericsError("pair root not found");
  };

  std::vector<SphereModel> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SphereModel m;
      m.a = a;
      m.b = b;
      m.root_index = root_index_of(a, b);
      m.valid = true;
      try {
        validate_sphere(cfg, SegmentSphere{a, b});
      } catch (const NumericsError&) {
        m.valid = false;
      }
      Vec3 d;
      double len = 0;
      for (int j = 0; j < 3; ++j) {
        d[j] = cfg.points[a][j] - cfg.points[b][j];
        len += d[j] * d[j];
      }
      len = std::sqrt(len);
      for (int j = 0; j < 3; ++j) m.xi[j] = d[j] / len;
      for (int j = 0; j < 3; ++j) m.lagrangian_axes[j] = std::abs(m.xi[j]) <= tol;
      out.push_back(m);
    }
  return out;
}

bool persistently_lagrangian(const LiftedGerm& lg, int theta_index, double tol) {
  if (theta_index < 0 || theta_index >= int(lg.rs.positive_roots_d.size()))
    throw SchemaError("root index out of range");
  const CartanVec& th = lg.rs.positive_roots_d[theta_index];
  double scale = 1.0;
  for (const CartanVec& c : lg.kahler_series) scale = std::max(scale, vec_norm(c));
  for (const CartanVec& c : lg.kahler_series)
    if (!c.empty() && std::abs(dot(th, c)) > tol * vec_norm(th) * scale) return false;
  return true;
}

}  // namespace ale
