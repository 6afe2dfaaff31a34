#ifndef ALE_ZNQUOT_HPP
#define ALE_ZNQUOT_HPP

#include <string>
#include <vector>

#include "ale/gh.hpp"

namespace ale {

struct PolygonSpec {
  double height;
  double radius;
  double phase;
};

// d regular n-gons centered on the x3-axis, invariant under rotation by
// 2 pi / n. Point index q * n + j is vertex j of polygon q, at angle
// phase_q + 2 pi j / n. The twist exponent m (coprime to n) selects the
// fiber character of the group action; it does not move the points.
struct PolygonConfig {
  int d, n;
  long m;
  std::vector<PolygonSpec> polygons;
  GHConfig cfg;

  int polygon_of(int idx) const { return idx / n; }
  int vertex_of(int idx) const { return idx % n; }
  // Index image under the generator (rotation by 2 pi / n).
  int rotate_index(int idx) const { return (idx / n) * n + (idx % n + 1) % n; }
};

PolygonConfig build_polygon_config(int d, int n, long m,
                                   const std::vector<PolygonSpec>& polygons);

// Dimension of the fixed subspace of the rotation action on the sum-zero
// coefficient space R^{dn}; computed by rank, equals d - 1.
int invariant_cohomology_dim(const PolygonConfig& pc);

struct AveragedClass {
  std::vector<double> coeffs;  // sum-zero vector in R^{dn}
  bool nonzero;
};

// Orbit average (1/n) sum_g g.(e_a - e_b); zero exactly when a and b lie in
// the same polygon.
AveragedClass averaged_class(const PolygonConfig& pc, int a, int b);

enum class QuotientShape { EmbeddedS2, RP2, DoublePointS2, Complicated, Invalid };

std::string to_string(QuotientShape s);

struct QuotientSphereVerdict {
  int a, b;
  QuotientShape shape;
  std::vector<double> class_coeffs;
  bool nonzero_class;
  std::string detail;
};

// Image of the segment sphere over [p_a, p_b] in the rotation quotient:
//   Invalid         non-horizontal segment, or blocked by another center
//   RP2             n = 2 and p_b = -p_a
//   DoublePointS2   edge of one polygon (adjacent vertices, n >= 3)
//   EmbeddedS2      distinct polygons, orbit segments pairwise disjoint
//   Complicated     any interior contact among the orbit segments
// Orbit-segment intersections are decided exactly when every vertex angle is
// a multiple of pi/6 or of pi/4, by rational arithmetic in the matching
// quadratic extension; other angles fall back to guarded floating point.
QuotientSphereVerdict classify_quotient_sphere(const PolygonConfig& pc, int a, int b,
                                               double tol = 1e-9);

// Period of the invariant class c on the segment sphere of the covering
// configuration.
double quotient_pairing(const PolygonConfig& pc, const std::vector<double>& c,
                        int a, int b);

// Vertex of polygon q closest to point a (smallest index on ties).
int closest_vertex(const PolygonConfig& pc, int a, int q);

}  // namespace ale

#endif
