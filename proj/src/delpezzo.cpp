#include "ale/delpezzo.hpp"

#include <numeric>

#include "ale/errors.hpp"

namespace ale {

namespace {

long mod(long x, long r) { return ((x % r) + r) % r; }

long inverse_mod(long a, long r) {
  long t = 0, nt = 1, rr = r, nr = mod(a, r);
  while (nr != 0) {
    long q = rr / nr;
    t -= q * nt;
    std::swap(t, nt);
    rr -= q * nr;
    std::swap(rr, nr);
  }
  if (rr != 1) throw NumericsError("element not invertible");
  return mod(t, r);
}

}  // namespace

std::vector<FixedPointEntry> singularity_inventory(const CyclicAction& act) {
  if (act.r < 1) throw SchemaError("group order must be positive");
  long w1 = mod(act.w1, act.r), w2 = mod(act.w2, act.r);
  if (w1 == 0 && w2 == 0) throw SchemaError("action must be nontrivial");

  std::vector<FixedPointEntry> out;
  for (int c1 = 0; c1 < 2; ++c1)
    for (int c2 = 0; c2 < 2; ++c2) {
      // tangent weight in factor f: +w at [0:1], -w at [1:0]
      long a1 = mod(c1 == 0 ? w1 : -w1, act.r);
      long a2 = mod(c2 == 0 ? w2 : -w2, act.r);
      long g1 = std::gcd(a1, act.r), g2 = std::gcd(a2, act.r);
      long rp = std::lcm(act.r / g1, act.r / g2);
      if (rp <= 1) continue;  // effective stabilizer trivial
      long k = act.r / rp;
      FixedPointEntry e;
      e.chart = {c1, c2};
      e.stabilizer = rp;
      e.weights = {mod(a1 / k, rp), mod(a2 / k, rp)};
      e.isolated = std::gcd(e.weights[0], rp) == 1 && std::gcd(e.weights[1], rp) == 1;
      if (e.isolated) {
        long q1 = mod(inverse_mod(e.weights[0], rp) * e.weights[1], rp);
        long q2 = mod(inverse_mod(e.weights[1], rp) * e.weights[0], rp);
        e.q = std::min(q1, q2);
        e.type = classify_T_singularity(rp, e.q);
        e.label = e.type.describe();
      } else {
        e.q = 0;
        e.type = TSingularity{};
        e.type.kind = TSingularity::Kind::NotClassT;
        e.label = "non-isolated: local action fixes a curve";
      }
      std::string pt = "([";
      pt += (c1 == 0 ? "0:1" : "1:0");
      pt += "],[";
      pt += (c2 == 0 ? "0:1" : "1:0");
      pt += "])";
      e.label = pt + " " + e.label;
      out.push_back(e);
    }
  return out;
}

}  // namespace ale
