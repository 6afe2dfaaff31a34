#include "ale/gh.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ale/errors.hpp"

namespace ale {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale3(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double config_scale(const GHConfig& cfg) {
  double s = 1.0;
  for (const Vec3& p : cfg.points) s = std::max(s, norm3(p));
  return s;
}

void check_off_centers(const GHConfig& cfg, const Vec3& x) {
  double tol = 1e-9 * config_scale(cfg);
  for (const Vec3& p : cfg.points)
    if (norm3(sub(x, p)) < tol)
      throw NumericsError("evaluation on a center");
}

// Distance from x to the ray {origin - s*dir : s >= 0}, dir unit.
double ray_distance(const Vec3& origin, const Vec3& dir, const Vec3& x) {
  Vec3 w = sub(x, origin);
  double t = -dot3(w, dir);
  if (t < 0) return norm3(w);
  return norm3(add(w, scale3(dir, t)));
}

double point_segment_distance(const Vec3& a, const Vec3& b, const Vec3& x) {
  Vec3 d = sub(b, a);
  double len2 = dot3(d, d);
  double t = len2 > 0 ? std::clamp(dot3(sub(x, a), d) / len2, 0.0, 1.0) : 0.0;
  return norm3(sub(x, add(a, scale3(d, t))));
}

// Min distance between the ray {c - s*dir : s in [0, huge]} and segment [a, b].
double ray_segment_distance(const Vec3& c, const Vec3& dir, const Vec3& a, const Vec3& b) {
  double best = 1e300;
  // Dense parameter scan is plenty for a validity filter.
  for (int i = 0; i <= 200; ++i) {
    double s = std::pow(10.0, -2.0 + 6.0 * i / 200.0);  // 0.01 .. 1e4
    Vec3 q = sub(c, scale3(dir, s));
    best = std::min(best, point_segment_distance(a, b, q));
  }
  best = std::min(best, point_segment_distance(a, b, c));
  return best;
}

int eps4(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

}  // namespace

GHConfig make_gh_config(std::vector<Vec3> points, std::optional<Vec3> string_direction) {
  if (points.empty()) throw SchemaError("GH configuration needs at least one center");
  GHConfig cfg;
  cfg.points = std::move(points);
  double scale = config_scale(cfg);
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
      if (norm3(sub(cfg.points[i], cfg.points[j])) < 1e-12 * scale)
        throw SchemaError("GH centers must be distinct");

  auto ray_clearance = [&](const Vec3& dir) {
    double clear = 1e300;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      for (std::size_t j = 0; j < cfg.points.size(); ++j)
        if (j != i)
          clear = std::min(clear, ray_distance(cfg.points[i], dir, cfg.points[j]));
      for (std::size_t a = 0; a < cfg.points.size(); ++a)
        for (std::size_t b = a + 1; b < cfg.points.size(); ++b) {
          if (a == i || b == i) continue;
          // segments running through the center itself carry no valid sphere,
          // so the string may start arbitrarily close to them
          if (point_segment_distance(cfg.points[a], cfg.points[b], cfg.points[i]) <
              1e-9 * scale)
            continue;
          clear = std::min(clear,
                           ray_segment_distance(cfg.points[i], dir, cfg.points[a], cfg.points[b]));
        }
    }
    return clear;
  };

  if (string_direction) {
    Vec3 s = *string_direction;
    double n = norm3(s);
    if (n < 1e-14) throw SchemaError("string_direction must be nonzero");
    s = scale3(s, 1.0 / n);
    double clear = 1e300;
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
      for (std::size_t j = 0; j < cfg.points.size(); ++j)
        if (j != i) clear = std::min(clear, ray_distance(cfg.points[i], s, cfg.points[j]));
    if (clear < 1e-9 * scale)
      throw SchemaError("string rays must avoid the other centers");
    cfg.string_direction = s;
    return cfg;
  }

  std::mt19937_64 rng(20240901u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 best_dir{0, 0, 1};
  double best_clear = -1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec3 d;
    if (attempt == 0)
      d = {1.0, 2.0, 3.0};
    else
      d = {gauss(rng), gauss(rng), gauss(rng)};
    double n = norm3(d);
    if (n < 1e-6) continue;
    d = scale3(d, 1.0 / n);
    double c = cfg.points.size() > 1 ? ray_clearance(d) : 1.0;
    if (c > best_clear) {
      best_clear = c;
      best_dir = d;
    }
    if (best_clear > 1e-3 * scale) break;
  }
  if (best_clear < 1e-9 * scale)
    throw NumericsError("no admissible string direction found");
  cfg.string_direction = best_dir;
  return cfg;
}

double potential(const GHConfig& cfg, const Vec3& x) {
  check_off_centers(cfg, x);
  double v = 0;
  for (const Vec3& p : cfg.points) v += 0.5 / norm3(sub(x, p));
  return v;
}

Vec3 potential_gradient(const GHConfig& cfg, const Vec3& x) {
  check_off_centers(cfg, x);
  Vec3 g{0, 0, 0};
  for (const Vec3& p : cfg.points) {
    Vec3 q = sub(x, p);
    double r = norm3(q);
    g = add(g, scale3(q, -0.5 / (r * r * r)));
  }
  return g;
}

Eigen::Matrix3d potential_hessian(const GHConfig& cfg, const Vec3& x) {
  check_off_centers(cfg, x);
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (const Vec3& p : cfg.points) {
    Vec3 q = sub(x, p);
    double r = norm3(q);
    double r5 = std::pow(r, 5);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        h(a, b) += (3.0 * q[a] * q[b] - (a == b ? r * r : 0.0)) / (2.0 * r5);
  }
  return h;
}

Vec3 gauge_potential(const GHConfig& cfg, const Vec3& x) {
  check_off_centers(cfg, x);
  const Vec3& s = cfg.string_direction;
  double scale = config_scale(cfg);
  Vec3 A{0, 0, 0};
  for (const Vec3& p : cfg.points) {
    Vec3 q = sub(x, p);
    double r = norm3(q);
    Vec3 c = cross3(s, q);
    double c2 = dot3(c, c);
    double axial = dot3(q, s);
    if (c2 < 1e-14 * scale * scale * 1e-14) {
      if (axial > 0) continue;  // on the regular axis, contribution vanishes
      throw NumericsError("gauge potential evaluated on a Dirac string; move string_direction");
    }
    if (std::sqrt(c2) / r < 1e-7 && axial < 0)
      throw NumericsError("gauge potential too close to a Dirac string; move string_direction");
    double fac = -(1.0 - axial / r) / (2.0 * c2);
    A = add(A, scale3(c, fac));
  }
  return A;
}

double f_weight(const GHConfig& cfg, int i, const Vec3& x) {
  if (i < 0 || i >= int(cfg.points.size())) throw SchemaError("center index out of range");
  double tol = 1e-9 * config_scale(cfg);
  for (std::size_t j = 0; j < cfg.points.size(); ++j)
    if (norm3(sub(x, cfg.points[j])) < tol) return j == std::size_t(i) ? 1.0 : 0.0;
  double vi = 0.5 / norm3(sub(x, cfg.points[i]));
  return vi / potential(cfg, x);
}

Vec3 f_weight_gradient(const GHConfig& cfg, int i, const Vec3& x) {
  if (i < 0 || i >= int(cfg.points.size())) throw SchemaError("center index out of range");
  check_off_centers(cfg, x);
  double V = potential(cfg, x);
  Vec3 dV = potential_gradient(cfg, x);
  Vec3 qi = sub(x, cfg.points[i]);
  double ri = norm3(qi);
  double vi = 0.5 / ri;
  Vec3 dvi = scale3(qi, -0.5 / (ri * ri * ri));
  Vec3 g{0, 0, 0};
  for (int a = 0; a < 3; ++a) g[a] = (dvi[a] * V - vi * dV[a]) / (V * V);
  return g;
}

Eigen::Matrix4d metric(const GHConfig& cfg, const R4& x) {
  Vec3 x3{x[0], x[1], x[2]};
  double V = potential(cfg, x3);
  Vec3 A = gauge_potential(cfg, x3);
  Eigen::Matrix4d g;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) g(a, b) = (a == b ? V : 0.0) + A[a] * A[b] / V;
    g(a, 3) = A[a] / V;
    g(3, a) = A[a] / V;
  }
  g(3, 3) = 1.0 / V;
  return g;
}

Eigen::Matrix4d kahler_form(const GHConfig& cfg, const Vec3& xi, const R4& x) {
  Vec3 x3{x[0], x[1], x[2]};
  double V = potential(cfg, x3);
  Vec3 A = gauge_potential(cfg, x3);
  Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
  auto lev = [](int a, int b, int c) -> int {
    int p[3] = {a, b, c};
    int sign = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (p[i] == p[j]) return 0;
        if (p[i] > p[j]) sign = -sign;
      }
    return sign;
  };
  for (int a = 0; a < 3; ++a) {
    // dx_a ^ eta part
    w(a, 3) += xi[a];
    w(3, a) -= xi[a];
    for (int b = 0; b < 3; ++b) {
      w(a, b) += xi[a] * A[b] - xi[b] * A[a];
      for (int i = 0; i < 3; ++i) w(a, b) += V * xi[i] * lev(i, a, b);
    }
  }
  return w;
}

Eigen::Matrix4d complex_structure(const GHConfig& cfg, const Vec3& xi, const R4& x) {
  double nxi = norm3(xi);
  if (std::abs(nxi - 1.0) > 1e-12)
    throw SchemaError("complex_structure needs a unit direction");
  Vec3 x3{x[0], x[1], x[2]};
  double V = potential(cfg, x3);
  Vec3 A = gauge_potential(cfg, x3);
  double sv = std::sqrt(V);

  // Orthonormal frame e_a = V^{-1/2} (d/dx_a - A_a d/dtau), e_4 = V^{1/2} d/dtau.
  Eigen::Matrix4d E = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 3; ++a) {
    E(a, a) = 1.0 / sv;
    E(3, a) = -A[a] / sv;
  }
  E(3, 3) = sv;
  Eigen::Matrix4d Einv = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 3; ++a) {
    Einv(a, a) = sv;
    Einv(3, a) = A[a] / sv;
  }
  Einv(3, 3) = 1.0 / sv;

  // I e_a = xi x e_a + xi_a e_4, I e_4 = -xi.
  Eigen::Matrix4d If = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 3; ++a) {
    Vec3 ea{0, 0, 0};
    ea[a] = 1;
    Vec3 im = cross3(xi, ea);
    for (int b = 0; b < 3; ++b) If(b, a) = im[b];
    If(3, a) = xi[a];
    If(a, 3) = -xi[a];
  }
  return E * If * Einv;
}

Eigen::Matrix4d chi_form(const GHConfig& cfg, int i, const R4& x) {
  Vec3 x3{x[0], x[1], x[2]};
  double V = potential(cfg, x3);
  Vec3 A = gauge_potential(cfg, x3);
  Vec3 df = f_weight_gradient(cfg, i, x3);
  auto lev = [](int a, int b, int c) -> int {
    int p[3] = {a, b, c};
    int sign = 1;
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) {
        if (p[u] == p[v]) return 0;
        if (p[u] > p[v]) sign = -sign;
      }
    return sign;
  };
  Eigen::Matrix4d chi = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 3; ++a) {
    chi(a, 3) += df[a];
    chi(3, a) -= df[a];
    for (int b = 0; b < 3; ++b) {
      chi(a, b) += df[a] * A[b] - df[b] * A[a];
      for (int c = 0; c < 3; ++c) chi(a, b) -= V * df[c] * lev(c, a, b);
    }
  }
  return chi;
}

Eigen::Matrix4d hodge_star2(const GHConfig& cfg, const R4& x, const Eigen::Matrix4d& F) {
  Eigen::Matrix4d g = metric(cfg, x);
  Eigen::Matrix4d ginv = g.inverse();
  double sg = std::sqrt(g.determinant());
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double acc = 0;
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) {
          int e = eps4(m, n, al, be);
          if (e == 0) continue;
          double up = 0;
          for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) up += ginv(al, r) * ginv(be, s) * F(r, s);
          acc += e * up;
        }
      out(m, n) = 0.5 * sg * acc;
    }
  return out;
}

ClosednessReport verify_closed(const GHConfig& cfg, const TwoFormField& field,
                               int samples, double h, std::uint64_t seed,
                               double min_center_dist) {
  std::vector<R4> pts = sample_points(cfg, samples, seed, min_center_dist);
  ClosednessReport rep;
  rep.samples = samples;
  rep.h = h;
  for (const R4& x : pts) {
    Eigen::Matrix4d dF[4];
    for (int mu = 0; mu < 4; ++mu) {
      R4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      dF[mu] = (field(xp) - field(xm)) / (2.0 * h);
    }
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c) {
          double r = dF[a](b, c) - dF[b](a, c) + dF[c](a, b);
          rep.max_residual = std::max(rep.max_residual, std::abs(r));
        }
  }
  return rep;
}

namespace {

void christoffel(const GHConfig& cfg, const R4& x, double h, double gam[4][4][4]) {
  Eigen::Matrix4d dg[4];
  for (int mu = 0; mu < 4; ++mu) {
    R4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    dg[mu] = (metric(cfg, xp) - metric(cfg, xm)) / (2.0 * h);
  }
  Eigen::Matrix4d ginv = metric(cfg, x).inverse();
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double acc = 0;
        for (int s = 0; s < 4; ++s)
          acc += ginv(l, s) * (dg[m](s, n) + dg[n](s, m) - dg[s](m, n));
        gam[l][m][n] = 0.5 * acc;
      }
}

double scalar_curvature_once(const GHConfig& cfg, const R4& x, double h) {
  double dgam[4][4][4][4];  // [deriv][l][m][n]
  for (int mu = 0; mu < 4; ++mu) {
    R4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    double gp[4][4][4], gm[4][4][4];
    christoffel(cfg, xp, h, gp);
    christoffel(cfg, xm, h, gm);
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          dgam[mu][l][m][n] = (gp[l][m][n] - gm[l][m][n]) / (2.0 * h);
  }
  double gam[4][4][4];
  christoffel(cfg, x, h, gam);
  Eigen::Matrix4d ginv = metric(cfg, x).inverse();
  double scal = 0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double ric = 0;
      for (int l = 0; l < 4; ++l) {
        ric += dgam[l][l][m][n] - dgam[n][l][m][l];
        for (int s = 0; s < 4; ++s)
          ric += gam[l][l][s] * gam[s][m][n] - gam[l][n][s] * gam[s][m][l];
      }
      scal += ginv(m, n) * ric;
    }
  return scal;
}

}  // namespace

double scalar_curvature_fd(const GHConfig& cfg, const R4& x, double h, bool richardson) {
  double s1 = scalar_curvature_once(cfg, x, h);
  if (!richardson) return s1;
  double s2 = scalar_curvature_once(cfg, x, h / 2);
  return (4.0 * s2 - s1) / 3.0;
}

CurvatureReport curvature_sweep(const GHConfig& cfg, int samples, double h, bool richardson,
                                std::uint64_t seed, double min_center_dist) {
  CurvatureReport rep;
  rep.samples = samples;
  rep.h = h;
  for (const R4& x : sample_points(cfg, samples, seed, min_center_dist))
    rep.max_abs_scalar = std::max(rep.max_abs_scalar,
                                  std::abs(scalar_curvature_fd(cfg, x, h, richardson)));
  return rep;
}

void validate_sphere(const GHConfig& cfg, const SegmentSphere& s, double tol) {
  int n = int(cfg.points.size());
  if (s.a < 0 || s.a >= n || s.b < 0 || s.b >= n || s.a == s.b)
    throw SchemaError("segment sphere needs two distinct center indices");
  const Vec3& pa = cfg.points[s.a];
  const Vec3& pb = cfg.points[s.b];
  double scale = std::max(1.0, norm3(sub(pb, pa)));
  for (int c = 0; c < n; ++c) {
    if (c == s.a || c == s.b) continue;
    if (point_segment_distance(pa, pb, cfg.points[c]) < tol * scale)
      throw NumericsError("segment sphere blocked by another center");
  }
}

double pairing(const GHConfig& cfg, const TwoFormField& form, const SegmentSphere& s,
               int n_quad) {
  validate_sphere(cfg, s);
  const Vec3& pa = cfg.points[s.a];
  const Vec3& pb = cfg.points[s.b];
  Vec3 delta = sub(pb, pa);
  double acc = 0;
  for (const auto& [node, weight] : gauss_legendre(n_quad)) {
    Vec3 x3 = add(pa, scale3(delta, node));
    R4 x{x3[0], x3[1], x3[2], 0.0};
    Eigen::Matrix4d F = form(x);
    double integrand = 0;
    for (int a = 0; a < 3; ++a) integrand += F(3, a) * delta[a];
    acc += weight * integrand;
  }
  return cfg.fiber_period * acc;
}

double pairing_chi(const GHConfig& cfg, int i, const SegmentSphere& s, int n_quad) {
  return pairing(cfg, [&](const R4& x) { return chi_form(cfg, i, x); }, s, n_quad);
}

double pairing_omega(const GHConfig& cfg, const Vec3& xi, const SegmentSphere& s, int n_quad) {
  return pairing(cfg, [&](const R4& x) { return kahler_form(cfg, xi, x); }, s, n_quad);
}

double class_to_period(const GHConfig& cfg, const std::vector<double>& c,
                       const SegmentSphere& s) {
  if (c.size() != cfg.points.size())
    throw SchemaError("class coefficient count must match the center count");
  double sum = 0, mx = 0;
  for (double v : c) {
    sum += v;
    mx = std::max(mx, std::abs(v));
  }
  if (std::abs(sum) > 1e-9 * std::max(1.0, mx))
    throw SchemaError("class coefficients must sum to zero");
  validate_sphere(cfg, s);
  return cfg.fiber_period * (c[s.a] - c[s.b]);
}

CohomologyBasis cohomology_basis(const GHConfig& cfg) {
  int n = int(cfg.points.size());
  CohomologyBasis basis;
  basis.dim = n - 1;
  for (int j = 1; j < n; ++j) {
    std::vector<double> c(n, 0.0);
    c[0] = 1.0;
    c[j] = -1.0;
    basis.classes.push_back(std::move(c));
  }
  return basis;
}

std::vector<R4> sample_points(const GHConfig& cfg, int n, std::uint64_t seed,
                              double min_center_dist, double min_string_dist) {
  Vec3 lo = cfg.points[0], hi = cfg.points[0];
  for (const Vec3& p : cfg.points)
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  double diam = std::max(1.0, norm3(sub(hi, lo)));
  for (int a = 0; a < 3; ++a) {
    lo[a] -= 0.75 * diam;
    hi[a] += 0.75 * diam;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<R4> out;
  int guard = 0;
  while (int(out.size()) < n) {
    if (++guard > 100000) throw NumericsError("sample_points: rejection sampling stalled");
    Vec3 x;
    for (int a = 0; a < 3; ++a) x[a] = lo[a] + (hi[a] - lo[a]) * uni(rng);
    bool ok = true;
    for (const Vec3& p : cfg.points)
      if (norm3(sub(x, p)) < min_center_dist) ok = false;
    if (ok)
      for (const Vec3& p : cfg.points)
        if (ray_distance(p, cfg.string_direction, x) < min_string_dist) ok = false;
    if (!ok) continue;
    out.push_back({x[0], x[1], x[2], cfg.fiber_period * uni(rng)});
  }
  return out;
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw SchemaError("quadrature order must be positive");
  std::vector<std::pair<double, double>> out(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    out[i] = {(x + 1.0) / 2.0, w / 2.0};
  }
  return out;
}

}  // namespace ale
