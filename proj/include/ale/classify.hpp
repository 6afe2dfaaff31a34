#ifndef ALE_CLASSIFY_HPP
#define ALE_CLASSIFY_HPP

#include <array>
#include <complex>
#include <vector>

#include "ale/germ.hpp"
#include "ale/gh.hpp"
#include "ale/rootsys.hpp"

namespace ale {

// Point of the parameter space R^3 (x) h, split as a Kaehler part zeta_r and
// a complex part zeta_c = zeta_2 + i zeta_3.
struct DeformationParameter {
  RootKind kind;
  int rank;
  CartanVec zeta_r;
  CartanVecC zeta_c;
};

struct RootVerdict {
  int root_index;
  bool lagrangian;             // <theta, zeta_r> = 0 within tol
  bool holomorphic;            // <theta, zeta_c> = 0 within tol
  bool wall_violation;         // both pairings vanish
  bool primitive_lagrangian;   // lagrangian and not a sum of two lagrangian positive roots
  bool primitive_holomorphic;
};

struct Classification {
  std::vector<RootVerdict> verdicts;
  bool smooth;  // no wall_violation
};

Classification classify_roots(const RootSystem& rs, const DeformationParameter& zeta,
                              double tol = 1e-9);

// Real three-component form (zeta_1, zeta_2, zeta_3); zeta_r = zeta_1,
// zeta_c = zeta_2 + i zeta_3.
using ParameterTriple = std::array<CartanVec, 3>;

ParameterTriple to_triple(const DeformationParameter& zeta);
DeformationParameter from_triple(RootKind kind, int rank, const ParameterTriple& t);

struct RotationWitness {
  double phi;
  std::array<std::array<double, 3>, 3> u;  // SO(3), acts on the R^3 index
  ParameterTriple xi;
};

// For a root with <theta, zeta_1> = 0, produces the rotation
//   u = [[0, -cos phi, sin phi], [1, 0, 0], [0, sin phi, cos phi]]
// whose image xi = u(zeta) satisfies <theta, xi_c> = 0: the cycle of theta
// becomes holomorphic after the rotation.
RotationWitness rotation_to_holomorphic(const RootSystem& rs, int theta_index,
                                        const ParameterTriple& zeta, double tol = 1e-9);

struct ScaledParameter {
  DeformationParameter param;
  double metric_factor;  // 1 / |lambda|^2
};

// lambda . (zeta_r, zeta_c) = (|lambda|^2 zeta_r, lambda^2 zeta_c); boolean
// verdicts of classify_roots are invariant under this action.
ScaledParameter scale_parameter(std::complex<double> lambda, const DeformationParameter& zeta);

// The A_{n-1} parameter triple of a multi-center configuration: zeta_j is the
// sum-zero projection of the vector of j-th center coordinates, so that
// <theta_ab, zeta_j> = (p_a - p_b)_j.
ParameterTriple gh_parameter_triple(const GHConfig& cfg);
DeformationParameter gh_deformation_parameter(const GHConfig& cfg);

struct SphereModel {
  int a, b;
  int root_index;          // e_a - e_b among the positive roots of A_{n-1}
  bool valid;              // open segment [p_a, p_b] avoids the other centers
  Vec3 xi;                 // (p_a - p_b)/|p_a - p_b|
  // Directions among the coordinate axes whose Kaehler form makes the sphere
  // Lagrangian, i.e. axes orthogonal to xi within tol.
  std::array<bool, 3> lagrangian_axes;
};

// Model spheres of a multi-center configuration: every center pair, flagged
// by segment validity, holomorphic for I_xi and Lagrangian for omega_zeta
// with zeta perpendicular to xi.
std::vector<SphereModel> sphere_inventory_A(const GHConfig& cfg, double tol = 1e-9);

// Checks <theta, zeta_r(t)> = 0 for every computed order of the lifted
// Kaehler germ. A finite-order stand-in for an identically-Lagrangian class.
bool persistently_lagrangian(const LiftedGerm& lg, int theta_index, double tol = 1e-9);

}  // namespace ale

#endif
