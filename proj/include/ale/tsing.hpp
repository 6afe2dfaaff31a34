#ifndef ALE_TSING_HPP
#define ALE_TSING_HPP

#include <string>

namespace ale {

// Classification of the cyclic quotient singularity 1/r (1, q),
// 0 < q < r, gcd(q, r) = 1.
struct TSingularity {
  enum class Kind { RDP_A, ClassT, NotClassT };
  Kind kind;
  long r = 0, q = 0;
  // RDP_A: A_{r-1} rational double point (q = r - 1).
  // ClassT: r = d n^2, q = d n a - 1 mod r, gcd(a, n) = 1, n > 1.
  long d = 0, n = 0, a = 0;

  std::string describe() const;
};

TSingularity classify_T_singularity(long r, long q);

}  // namespace ale

#endif
