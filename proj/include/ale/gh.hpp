#ifndef ALE_GH_HPP
#define ALE_GH_HPP

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ale {

using Vec3 = std::array<double, 3>;
using R4 = std::array<double, 4>;  // (x1, x2, x3, tau)

// Multi-center gravitational instanton data on R^3 minus the centers.
//   V(x)   = sum_i 1/(2 |x - p_i|)
//   eta    = dtau + A, dA = *dV (flat 3d star, orientation dx1 dx2 dx3)
//   g      = V dx.dx + V^{-1} eta^2, fiber period 2 pi
// Each center carries a Dirac string along {p_i - s * string_direction, s > 0}.
struct GHConfig {
  std::vector<Vec3> points;
  Vec3 string_direction;
  double fiber_period = 6.283185307179586476925286766559;
};

// Validates the point set and picks a string direction clear of every
// inter-point direction and segment when none is supplied.
GHConfig make_gh_config(std::vector<Vec3> points,
                        std::optional<Vec3> string_direction = std::nullopt);

double potential(const GHConfig& cfg, const Vec3& x);
Vec3 potential_gradient(const GHConfig& cfg, const Vec3& x);
Eigen::Matrix3d potential_hessian(const GHConfig& cfg, const Vec3& x);

// Sum of charge-1/2 monopole potentials; flux of dA through a small sphere
// around each center is 2 pi. Rejects evaluation near a string.
Vec3 gauge_potential(const GHConfig& cfg, const Vec3& x);

// f_i = V_i / V extended by its limits f_i(p_j) = delta_ij at the centers.
double f_weight(const GHConfig& cfg, int i, const Vec3& x);
Vec3 f_weight_gradient(const GHConfig& cfg, int i, const Vec3& x);

Eigen::Matrix4d metric(const GHConfig& cfg, const R4& x);
Eigen::Matrix4d kahler_form(const GHConfig& cfg, const Vec3& xi, const R4& x);
// Endomorphism of the tangent space with omega_xi = g(I_xi ., .).
Eigen::Matrix4d complex_structure(const GHConfig& cfg, const Vec3& xi, const R4& x);
// Harmonic antiselfdual representative attached to center i.
Eigen::Matrix4d chi_form(const GHConfig& cfg, int i, const R4& x);

// Hodge star on 2-forms for g with orientation dx1 ^ dx2 ^ dx3 ^ eta > 0.
Eigen::Matrix4d hodge_star2(const GHConfig& cfg, const R4& x, const Eigen::Matrix4d& F);

using TwoFormField = std::function<Eigen::Matrix4d(const R4&)>;

struct ClosednessReport {
  double max_residual = 0;
  int samples = 0;
  double h = 0;
};

// Max norm of the finite-difference exterior derivative of the field over
// seeded random samples staying clear of centers and strings.
ClosednessReport verify_closed(const GHConfig& cfg, const TwoFormField& field,
                               int samples, double h = 1e-4, std::uint64_t seed = 1,
                               double min_center_dist = 0.25);

// Scalar curvature by nested centered differences of the metric.
double scalar_curvature_fd(const GHConfig& cfg, const R4& x, double h = 1e-3,
                           bool richardson = false);

struct CurvatureReport {
  double max_abs_scalar = 0;
  int samples = 0;
  double h = 0;
};

CurvatureReport curvature_sweep(const GHConfig& cfg, int samples, double h = 1e-3,
                                bool richardson = false, std::uint64_t seed = 1,
                                double min_center_dist = 0.3);

// Fibered sphere over the segment [p_a, p_b]; the open segment must avoid
// all other centers.
struct SegmentSphere {
  int a, b;
};

void validate_sphere(const GHConfig& cfg, const SegmentSphere& s, double tol = 1e-9);

// Integral of the 2-form over the fibered sphere: Gauss-Legendre quadrature
// of the fiber-reduced integrand along the segment.
double pairing(const GHConfig& cfg, const TwoFormField& form, const SegmentSphere& s,
               int n_quad = 64);
double pairing_chi(const GHConfig& cfg, int i, const SegmentSphere& s, int n_quad = 64);
double pairing_omega(const GHConfig& cfg, const Vec3& xi, const SegmentSphere& s,
                     int n_quad = 64);

// Period of the class sum_i c_i chi_i (sum c_i = 0) on the sphere: the
// quadrature collapses to fiber_period * (c_a - c_b).
double class_to_period(const GHConfig& cfg, const std::vector<double>& c,
                       const SegmentSphere& s);

struct CohomologyBasis {
  int dim;
  // Coefficient vectors of chi classes spanning {sum c_i chi_i : sum c_i = 0}.
  std::vector<std::vector<double>> classes;
};

CohomologyBasis cohomology_basis(const GHConfig& cfg);

// Seeded rejection sampler used by the verification sweeps.
std::vector<R4> sample_points(const GHConfig& cfg, int n, std::uint64_t seed,
                              double min_center_dist, double min_string_dist = 0.05);

// Nodes and weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace ale

#endif
