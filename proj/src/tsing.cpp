#include "ale/tsing.hpp"

#include <numeric>

#include "ale/errors.hpp"

namespace ale {

std::string TSingularity::describe() const {
  switch (kind) {
    case Kind::RDP_A:
      return "A" + std::to_string(r - 1);
    case Kind::ClassT:
      return "T(d=" + std::to_string(d) + ",n=" + std::to_string(n) +
             ",a=" + std::to_string(a) + ")";
    case Kind::NotClassT:
      return "1/" + std::to_string(r) + "(1," + std::to_string(q) + ") not class T";
  }
  return "";
}

TSingularity classify_T_singularity(long r, long q) {
  if (r < 2) throw SchemaError("classify_T_singularity: r must be >= 2");
  if (q <= 0 || q >= r) throw SchemaError("classify_T_singularity: need 0 < q < r");
  if (std::gcd(q, r) != 1) throw SchemaError("classify_T_singularity: gcd(q, r) must be 1");

  TSingularity out;
  out.r = r;
  out.q = q;
  if ((q + 1) % r == 0) {
    out.kind = TSingularity::Kind::RDP_A;
    return out;
  }
  // Smallest n > 1 with n^2 | r, then smallest coprime a with
  // q = d n a - 1 (mod r); a only matters modulo n.
  for (long n = 2; n * n <= r; ++n) {
    if (r % (n * n) != 0) continue;
    long d = r / (n * n);
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      if ((d * n * a - 1 - q) % r == 0) {
        out.kind = TSingularity::Kind::ClassT;
        out.d = d;
        out.n = n;
        out.a = a;
        return out;
      }
    }
  }
  out.kind = TSingularity::Kind::NotClassT;
  return out;
}

}  // namespace ale
