#ifndef ALE_ROOTSYS_HPP
#define ALE_ROOTSYS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ale {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;

using CartanVec = std::vector<double>;
using CartanVecC = std::vector<std::complex<double>>;

enum class RootKind { A, D, E };

std::string to_string(RootKind k);
RootKind root_kind_from_string(const std::string& s);

// Simply-laced root system in an explicit rational ambient model:
//   A_d: {x in Q^{d+1} : sum x_i = 0}, roots e_a - e_b
//   D_d: Q^d, roots +-e_i +- e_j (i < j)
//   E_6, E_7, E_8: standard coordinates inside Q^8
// All roots have squared length 2; pairings use the ambient dot product.
struct RootSystem {
  RootKind kind;
  int rank;
  int ambient_dim;
  std::vector<RatVec> simple_roots;
  // Lexicographically ordered by coefficient vector over the simple roots.
  std::vector<RatVec> positive_roots;
  // positive_coeffs[i] = expansion of positive_roots[i] over simple_roots,
  // always a vector of non-negative integers.
  std::vector<std::vector<long>> positive_coeffs;

  std::vector<CartanVec> positive_roots_d;  // double copies of positive_roots
};

RootSystem build_root_system(RootKind kind, int rank);

int expected_positive_count(RootKind kind, int rank);

double dot(const CartanVec& a, const CartanVec& b);
std::complex<double> dot(const CartanVec& a, const CartanVecC& b);
Rational dot(const RatVec& a, const RatVec& b);

// Indices of positive roots theta with |<theta, v>| <= tol * max(|theta||v|, 1).
std::vector<int> wall_test(const RootSystem& rs, const CartanVec& v, double tol = 1e-9);
std::vector<int> wall_test(const RootSystem& rs, const CartanVecC& v, double tol = 1e-9);
// Exact variant for rational vectors: tol ignored, pairing compared to zero.
std::vector<int> wall_test(const RootSystem& rs, const RatVec& v);

struct PrimitiveDecomposition {
  bool primitive;
  // When not primitive: indices (i, j) of positive roots with
  // theta = positive_roots[i] + positive_roots[j] and P true for both.
  std::optional<std::pair<int, int>> witness;
};

// theta_index refers to rs.positive_roots. P is evaluated on positive roots.
PrimitiveDecomposition primitive_decomposition(
    const RootSystem& rs, int theta_index,
    const std::function<bool(const RootSystem&, int)>& P);

// Reflection in the root: v - <v, root> root (roots have length^2 = 2).
RatVec reflect(const RatVec& v, const RatVec& root);
CartanVec reflect(const CartanVec& v, const CartanVec& root);

// Orbit of v under the Weyl group, closed under all simple reflections.
// Throws NumericsError if the orbit exceeds max_size.
std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& v,
                               std::size_t max_size = 2000000);

// Order of the product s_{word[0]} s_{word[1]} ... of simple reflections.
int weyl_element_order(const RootSystem& rs, const std::vector<int>& word);

RatVec rat_vec(const CartanVec& v);
CartanVec dbl_vec(const RatVec& v);

}  // namespace ale

#endif
