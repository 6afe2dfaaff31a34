#ifndef ALE_DELPEZZO_HPP
#define ALE_DELPEZZO_HPP

#include <array>
#include <string>
#include <vector>

#include "ale/tsing.hpp"

namespace ale {

// Z_r action on CP^1 x CP^1 by ([u1:v1],[u2:v2]) -> ([e^{2 pi i w1/r} u1 : v1],
// [e^{2 pi i w2/r} u2 : v2]).
struct CyclicAction {
  long r;
  long w1, w2;
};

struct FixedPointEntry {
  // chart[f] = 0 means the point [0:1] in factor f, 1 means [1:0]
  std::array<int, 2> chart;
  long stabilizer;             // order of the effective local group
  std::array<long, 2> weights; // tangent weights of the effective action
  bool isolated;               // both weights coprime to the stabilizer order
  long q;                      // normal form 1/stabilizer (1, q); 0 when not isolated
  TSingularity type;           // classification of the normal form
  std::string label;
};

// The four torus-fixed points of the product with their local quotient data.
// Points with trivial effective stabilizer are dropped; points whose local
// action fixes a curve are kept with isolated = false.
std::vector<FixedPointEntry> singularity_inventory(const CyclicAction& act);

}  // namespace ale

#endif
