#ifndef ALE_CONIC_HPP
#define ALE_CONIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace ale {

using Cx = std::complex<double>;

// Conic fibration {eps1 a^2 + eps2 b^2 + x a b = g^2} over the x-line; the
// central member (eps = 0) degenerates to a surface with two A_1 points.
struct ConicFamily {
  Cx eps1, eps2;

  bool smooth_total_space() const { return eps1 * eps2 != Cx(0.0); }
};

struct DegenerateFibers {
  std::vector<Cx> x;           // fibers splitting into two lines
  bool double_value;           // x = 0 with multiplicity two
  bool singular_total_space;   // eps1 * eps2 = 0
};

// Solutions of x^2 = 4 eps1 eps2.
DegenerateFibers degenerate_fibers(Cx eps1, Cx eps2);

// c_alpha a + c_beta b + c_gamma g
struct LinearForm {
  Cx c_alpha, c_beta, c_gamma;
};

struct SplitFiber {
  LinearForm l1, l2;
  // max coefficient mismatch between l1 * l2 and the quadric
  double residual;
  // the two lines are distinct (meet in a single point)
  bool normal_crossing;
};

// Factors eps1 a^2 + eps2 b^2 + x a b - g^2 into two linear forms; requires
// x^2 = 4 eps1 eps2. The alpha coefficient of the first form is fixed to the
// principal square root of eps1 (beta-leading when eps1 = 0).
SplitFiber split_degenerate_fiber(Cx eps1, Cx eps2, Cx x);

struct ChartCheckReport {
  double max_residual;
  int samples;
};

// Samples the two invariant charts x1 = u^2, y1 = (v/w)^2, z1 = u v / w and
// x2 = u^2, y2 = (w/v)^2, z2 = u w / v, checking x_i y_i = z_i^2, the gluing
// y1 y2 = 1 and z1 z2 = x1 where both charts are defined.
ChartCheckReport invariant_chart_check(int samples, std::uint64_t seed = 1);

// A parameter line eps = t (delta1, delta2) yields a smoothing of both A_1
// points exactly when it avoids the coordinate axes.
bool nondegenerate_line(Cx delta1, Cx delta2);

// Same verdict through the one-parameter surface germ attached to each A_1
// point (first-derivative nondegeneracy of w^2 + delta_i t).
bool nondegenerate_line_via_germs(Cx delta1, Cx delta2);

}  // namespace ale

#endif
