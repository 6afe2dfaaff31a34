#include "ale/znquot.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <optional>

#include "ale/errors.hpp"
#include "ale/exactgeom.hpp"

namespace ale {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Rational rational_from_double(double x) { return Rational(x); }

// Exact cos/sin at s * pi / 6 in Q(sqrt 3).
QuadExt cos6(int s) {
  s = ((s % 12) + 12) % 12;
  static const int whole[12] = {1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0};
  static const int halves[12] = {0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 1, 0};
  static const int roots[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
  return QuadExt(Rational(whole[s]) + Rational(halves[s]) / 2, Rational(roots[s]) / 2, 3);
}
QuadExt sin6(int s) { return cos6(s - 3); }

// Exact cos/sin at s * pi / 4 in Q(sqrt 2).
QuadExt cos4(int s) {
  s = ((s % 8) + 8) % 8;
  static const int whole[8] = {1, 0, 0, 0, -1, 0, 0, 0};
  static const int roots[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  return QuadExt(Rational(whole[s]), Rational(roots[s]) / 2, 2);
}
QuadExt sin4(int s) { return cos4(s - 2); }

std::optional<long> nearly_integer(double x) {
  double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return long(r);
  return std::nullopt;
}

double vertex_angle(const PolygonConfig& pc, int idx) {
  return pc.polygons[pc.polygon_of(idx)].phase + 2.0 * kPi * pc.vertex_of(idx) / pc.n;
}

struct PlanePoint {
  double x, y;
  std::optional<XPoint> exact;
};

// In-plane coordinates of all points, with exact values when every vertex
// angle is a multiple of pi/6 or pi/4.
std::vector<PlanePoint> plane_points(const PolygonConfig& pc) {
  int total = pc.d * pc.n;
  bool all6 = true, all4 = true;
  std::vector<long> s6(total), s4(total);
  for (int i = 0; i < total; ++i) {
    double th = vertex_angle(pc, i);
    if (auto s = nearly_integer(th * 6.0 / kPi); s && all6)
      s6[i] = *s;
    else
      all6 = false;
    if (auto s = nearly_integer(th * 4.0 / kPi); s && all4)
      s4[i] = *s;
    else
      all4 = false;
  }
  std::vector<PlanePoint> out(total);
  for (int i = 0; i < total; ++i) {
    out[i].x = pc.cfg.points[i][0];
    out[i].y = pc.cfg.points[i][1];
    if (all6 || all4) {
      QuadExt c = all6 ? cos6(int(s6[i])) : cos4(int(s4[i]));
      QuadExt s = all6 ? sin6(int(s6[i])) : sin4(int(s4[i]));
      QuadExt r(rational_from_double(pc.polygons[pc.polygon_of(i)].radius));
      r.disc = c.disc;
      out[i].exact = XPoint{r * c, r * s};
    }
  }
  return out;
}

SegmentRelation relate(const std::vector<PlanePoint>& pts, int a, int b, int c, int d,
                       double tol) {
  if (pts[a].exact && pts[b].exact && pts[c].exact && pts[d].exact)
    return segment_relation(*pts[a].exact, *pts[b].exact, *pts[c].exact, *pts[d].exact);
  return segment_relation(pts[a].x, pts[a].y, pts[b].x, pts[b].y, pts[c].x, pts[c].y,
                          pts[d].x, pts[d].y, tol);
}

}  // namespace

PolygonConfig build_polygon_config(int d, int n, long m,
                                   const std::vector<PolygonSpec>& polygons) {
  if (d < 1 || n < 1) throw SchemaError("need d >= 1 polygons and symmetry order n >= 1");
  if (int(polygons.size()) != d) throw SchemaError("polygon count must equal d");
  if (std::gcd(((m % n) + n) % n, long(n)) != 1 && n > 1)
    throw SchemaError("twist exponent must be coprime to n");
  for (const PolygonSpec& p : polygons) {
    if (!(p.radius > 0)) throw SchemaError("polygon radius must be positive");
    if (!std::isfinite(p.height) || !std::isfinite(p.radius) || !std::isfinite(p.phase))
      throw SchemaError("polygon data must be finite");
  }

  PolygonConfig pc;
  pc.d = d;
  pc.n = n;
  pc.m = m;
  pc.polygons = polygons;

  std::vector<Vec3> pts;
  for (int q = 0; q < d; ++q)
    for (int j = 0; j < n; ++j) {
      double th = polygons[q].phase + 2.0 * kPi * j / n;
      pts.push_back({polygons[q].radius * std::cos(th), polygons[q].radius * std::sin(th),
                     polygons[q].height});
    }

  double scale = 1.0;
  for (const Vec3& p : pts)
    scale = std::max(scale, std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1],
             dz = pts[i][2] - pts[j][2];
      if (std::sqrt(dx * dx + dy * dy + dz * dz) < 1e-9 * scale)
        throw SchemaError("polygon vertex sets must be pairwise disjoint");
    }

  pc.cfg = make_gh_config(std::move(pts));
  return pc;
}

int invariant_cohomology_dim(const PolygonConfig& pc) {
  int total = pc.d * pc.n;
  // rows: (P - I) c = 0 and sum c = 0; fixed dimension = total - rank
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(total + 1, total);
  for (int i = 0; i < total; ++i) {
    M(i, pc.rotate_index(i)) += 1.0;
    M(i, i) -= 1.0;
    M(total, i) = 1.0;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-9);
  return total - int(lu.rank());
}

AveragedClass averaged_class(const PolygonConfig& pc, int a, int b) {
  int total = pc.d * pc.n;
  if (a < 0 || a >= total || b < 0 || b >= total || a == b)
    throw SchemaError("need two distinct point indices");
  AveragedClass out;
  out.coeffs.assign(total, 0.0);
  int ia = a, ib = b;
  for (int j = 0; j < pc.n; ++j) {
    out.coeffs[ia] += 1.0 / pc.n;
    out.coeffs[ib] -= 1.0 / pc.n;
    ia = pc.rotate_index(ia);
    ib = pc.rotate_index(ib);
  }
  out.nonzero = false;
  for (double c : out.coeffs)
    if (std::abs(c) > 1e-12) out.nonzero = true;
  return out;
}

std::string to_string(QuotientShape s) {
  switch (s) {
    case QuotientShape::EmbeddedS2: return "EmbeddedS2";
    case QuotientShape::RP2: return "RP2";
    case QuotientShape::DoublePointS2: return "DoublePointS2";
    case QuotientShape::Complicated: return "Complicated";
    case QuotientShape::Invalid: return "Invalid";
  }
  return "?";
}

QuotientSphereVerdict classify_quotient_sphere(const PolygonConfig& pc, int a, int b,
                                               double tol) {
  int total = pc.d * pc.n;
  if (a < 0 || a >= total || b < 0 || b >= total || a == b)
    throw SchemaError("need two distinct point indices");

  QuotientSphereVerdict v;
  v.a = a;
  v.b = b;
  AveragedClass cls = averaged_class(pc, a, b);
  v.class_coeffs = cls.coeffs;
  v.nonzero_class = cls.nonzero;

  const Vec3& pa = pc.cfg.points[a];
  const Vec3& pb = pc.cfg.points[b];
  double scale = 1.0;
  for (const Vec3& p : pc.cfg.points)
    scale = std::max({scale, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});

  if (std::abs(pa[2] - pb[2]) > tol * scale) {
    v.shape = QuotientShape::Invalid;
    v.detail = "segment not horizontal";
    return v;
  }
  try {
    validate_sphere(pc.cfg, SegmentSphere{a, b});
  } catch (const NumericsError&) {
    v.shape = QuotientShape::Invalid;
    v.detail = "segment blocked by another center";
    return v;
  }

  if (pc.polygon_of(a) == pc.polygon_of(b)) {
    bool antipodal = std::abs(pa[0] + pb[0]) <= tol * scale &&
                     std::abs(pa[1] + pb[1]) <= tol * scale;
    if (pc.n == 2 && antipodal) {
      v.shape = QuotientShape::RP2;
      v.detail = "antipodal pair, quotient folds the sphere onto itself";
      return v;
    }
    int diff = (pc.vertex_of(a) - pc.vertex_of(b) + pc.n) % pc.n;
    if (diff == 1 || diff == pc.n - 1) {
      v.shape = QuotientShape::DoublePointS2;
      v.detail = "polygon edge, adjacent orbit segments meet at the shared vertex";
      return v;
    }
    v.shape = QuotientShape::Complicated;
    v.detail = "polygon chord, orbit segments overlap beyond a vertex";
    return v;
  }

  std::vector<PlanePoint> pts = plane_points(pc);
  std::vector<std::pair<int, int>> orbit;
  int ia = a, ib = b;
  for (int j = 0; j < pc.n; ++j) {
    orbit.push_back({ia, ib});
    ia = pc.rotate_index(ia);
    ib = pc.rotate_index(ib);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      SegmentRelation r = relate(pts, orbit[i].first, orbit[i].second, orbit[j].first,
                                 orbit[j].second, tol);
      if (r != SegmentRelation::Disjoint) {
        v.shape = QuotientShape::Complicated;
        v.detail = "orbit segments " + std::to_string(i) + " and " + std::to_string(j) +
                   (r == SegmentRelation::SharedEndpoint ? " share an endpoint"
                                                         : " meet in an interior point");
        return v;
      }
    }
  v.shape = QuotientShape::EmbeddedS2;
  v.detail = "orbit segments pairwise disjoint";
  return v;
}

double quotient_pairing(const PolygonConfig& pc, const std::vector<double>& c, int a,
                        int b) {
  return class_to_period(pc.cfg, c, SegmentSphere{a, b});
}

int closest_vertex(const PolygonConfig& pc, int a, int q) {
  if (q < 0 || q >= pc.d) throw SchemaError("polygon index out of range");
  const Vec3& pa = pc.cfg.points[a];
  int best = -1;
  double best_d = 0;
  for (int j = 0; j < pc.n; ++j) {
    int idx = q * pc.n + j;
    if (idx == a) continue;
    const Vec3& p = pc.cfg.points[idx];
    double dx = p[0] - pa[0], dy = p[1] - pa[1], dz = p[2] - pa[2];
    double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (best < 0 || dist < best_d - 1e-15 * (1 + best_d)) {
      best = idx;
      best_d = dist;
    }
  }
  return best;
}

}  // namespace ale
