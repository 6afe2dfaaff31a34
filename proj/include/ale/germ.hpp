#ifndef ALE_GERM_HPP
#define ALE_GERM_HPP

#include <complex>
#include <vector>

#include "ale/rootsys.hpp"

namespace ale {

using Cplx = std::complex<double>;
using Poly = std::vector<Cplx>;  // coefficients, low to high

Cplx poly_eval(const Poly& p, Cplx z);
// Roots of the monic polynomial w^n + c_{n-1} w^{n-1} + ... + c_0,
// c = (c_0, ..., c_{n-1}).
std::vector<Cplx> monic_roots(const std::vector<Cplx>& c);
// Discriminant of the same monic polynomial, via the Sylvester resultant
// of p and p'.
Cplx monic_discriminant(const std::vector<Cplx>& c);

// One-parameter family of A_k surface singularities
//   x y = w^{k+1} + a_{k-1}(z) w^{k-1} + ... + a_0(z),  a_i(0) = 0.
struct CoefficientGerm {
  int k;
  std::vector<Poly> a;  // a[i] = a_i(z), i = 0..k-1

  void validate() const;
  // Coefficients (c_0, ..., c_k) of the monic degree-(k+1) w-polynomial at z.
  std::vector<Cplx> w_poly_at(Cplx z) const;
};

using VecSeries = std::vector<CartanVecC>;   // [q] = coefficient of t^q
using RealVecSeries = std::vector<CartanVec>;

// Single-valued parameter curve t -> (zeta_r(t), zeta_c(t)) obtained on the
// cover z = t^cover_order, expanded around t = 0.
struct LiftedGerm {
  RootSystem rs;
  int cover_order = 1;
  VecSeries series;            // complex part, series[0] = 0
  RealVecSeries kahler_series; // real part, may be empty
  // Diagnostics from an A_k lift.
  std::vector<int> monodromy;      // branch permutation around the z-loop
  std::vector<int> cluster_of;     // branch -> coincident-branch cluster
  double loop_radius = 0;
  double sample_radius = 1.0;      // |t| circle used for the reconstruction
};

struct LiftOptions {
  double loop_radius = 0.2;
  int n_steps = 256;       // continuation steps per z-loop, doubled on ambiguity
  int truncation = 8;      // series truncation order in t
  double start_angle = 0;  // phase of the initial point on the z-loop
  double tol = 1e-8;
};

// Tracks the k+1 roots around |z| = loop_radius, computes the monodromy
// permutation and its order d, then reconstructs the root curve as a power
// series in t on |t| = loop_radius^{1/d}. Branches that coincide identically
// along the loop are tracked as clusters; the trivial germ (all branches
// identical, no smoothing directions) is rejected.
LiftedGerm lift_Ak_germ(const CoefficientGerm& g, const LiftOptions& opt = {});

// lift_Ak_germ with automatic retries: radius halved on root collision,
// step count doubled on tracking ambiguity.
LiftedGerm lift_Ak_germ_auto(const CoefficientGerm& g, LiftOptions opt = {},
                             int max_retries = 6);

struct TangentGraviton {
  int p = 0;                 // leading order of the deformation
  CartanVec zeta_dot_r;      // real leading coefficient (zero vector if absent)
  CartanVecC zeta_dot_c;     // complex leading coefficient
  bool smooth = false;       // leading coefficient avoids every wall jointly
  double epsilon_exponent = 0;  // gluing scale exponent p/2
};

// Leading-order extraction. A root theta counts as violated only when both
// <theta, zeta_dot_r> and <theta, zeta_dot_c> vanish within tol.
TangentGraviton tangent_graviton(const LiftedGerm& lg, double tol = 1e-8);

// First-derivative criterion: order-1 complex coefficient nonzero and off
// every root kernel. Real part ignored.
bool check_nondegenerate_def11(const LiftedGerm& lg, double tol = 1e-8);
bool check_nondegenerate_def11(const CoefficientGerm& g, const LiftOptions& opt = {},
                               double tol = 1e-8);

// Order criterion on the cover: p <= p_bound and the leading coefficient is
// off every wall. p_bound defaults to the cover order.
bool check_nondegenerate_def12(const LiftedGerm& lg, int p_bound = -1,
                               double tol = 1e-8);

struct InvariantDims {
  long complex_dim;
  long real_dim;
};

// Dimensions of the Z_n-invariant deformation parameter space for d polygons
// of n points (n = 1 means the canonical A-type case).
InvariantDims invariant_parameter_dims(long d, long n);

// Evaluate the truncated series at t.
CartanVecC evaluate_series(const LiftedGerm& lg, Cplx t);

// Max over i of sum_q |delta_q| s^q where delta_q is the order-q coefficient
// mismatch between the elementary symmetric functions of the lifted root
// series and a_i(t^d), and s is the sampling radius. This measures the
// round-trip defect uniformly on the sampling circle.
double lift_round_trip_residual(const CoefficientGerm& g, const LiftedGerm& lg);

}  // namespace ale

#endif
