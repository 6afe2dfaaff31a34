#include "ale/conic.hpp"

#include <cmath>
#include <random>

#include "ale/errors.hpp"
#include "ale/germ.hpp"

namespace ale {

DegenerateFibers degenerate_fibers(Cx eps1, Cx eps2) {
  DegenerateFibers out;
  Cx prod = eps1 * eps2;
  out.singular_total_space = (prod == Cx(0.0));
  if (out.singular_total_space) {
    out.x = {Cx(0.0)};
    out.double_value = true;
    return out;
  }
  Cx root = 2.0 * std::sqrt(prod);
  out.x = {root, -root};
  out.double_value = false;
  return out;
}

SplitFiber split_degenerate_fiber(Cx eps1, Cx eps2, Cx x) {
  double scale = std::max({1.0, std::abs(eps1), std::abs(eps2), std::abs(x)});
  if (std::abs(x * x - 4.0 * eps1 * eps2) > 1e-12 * scale * scale)
    throw SchemaError("fiber does not satisfy x^2 = 4 eps1 eps2");

  // eps1 a^2 + eps2 b^2 + x a b = L^2 with L linear, then q = (L - g)(L + g).
  LinearForm L;
  if (eps1 != Cx(0.0)) {
    Cx s = std::sqrt(eps1);
    L = {s, x / (2.0 * s), 0.0};
  } else if (eps2 != Cx(0.0)) {
    Cx s = std::sqrt(eps2);
    L = {x / (2.0 * s), s, 0.0};
  } else {
    L = {0.0, 0.0, 0.0};  // quadric is -g^2
  }

  SplitFiber out;
  out.l1 = {L.c_alpha, L.c_beta, Cx(-1.0)};
  out.l2 = {L.c_alpha, L.c_beta, Cx(1.0)};

  auto& f = out.l1;
  auto& g = out.l2;
  double r = 0;
  r = std::max(r, std::abs(f.c_alpha * g.c_alpha - eps1));
  r = std::max(r, std::abs(f.c_beta * g.c_beta - eps2));
  r = std::max(r, std::abs(f.c_gamma * g.c_gamma - Cx(-1.0)));
  r = std::max(r, std::abs(f.c_alpha * g.c_beta + f.c_beta * g.c_alpha - x));
  r = std::max(r, std::abs(f.c_alpha * g.c_gamma + f.c_gamma * g.c_alpha));
  r = std::max(r, std::abs(f.c_beta * g.c_gamma + f.c_gamma * g.c_beta));
  out.residual = r;

  Cx cr1 = f.c_beta * g.c_gamma - f.c_gamma * g.c_beta;
  Cx cr2 = f.c_gamma * g.c_alpha - f.c_alpha * g.c_gamma;
  Cx cr3 = f.c_alpha * g.c_beta - f.c_beta * g.c_alpha;
  out.normal_crossing =
      std::abs(cr1) + std::abs(cr2) + std::abs(cr3) > 1e-12 * std::sqrt(scale);
  return out;
}

ChartCheckReport invariant_chart_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw SchemaError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 1.0), arg(0.0, 6.283185307179586);
  auto draw = [&]() { return std::polar(mag(rng), arg(rng)); };

  ChartCheckReport rep{0.0, samples};
  for (int it = 0; it < samples; ++it) {
    Cx u = draw(), v = draw(), w = draw();
    Cx x1 = u * u, y1 = (v / w) * (v / w), z1 = u * v / w;
    Cx x2 = u * u, y2 = (w / v) * (w / v), z2 = u * w / v;
    double r = 0;
    r = std::max(r, std::abs(x1 * y1 - z1 * z1));
    r = std::max(r, std::abs(x2 * y2 - z2 * z2));
    r = std::max(r, std::abs(y1 * y2 - Cx(1.0)));
    r = std::max(r, std::abs(z1 * z2 - x1));
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

bool nondegenerate_line(Cx delta1, Cx delta2) {
  return delta1 != Cx(0.0) && delta2 != Cx(0.0);
}

bool nondegenerate_line_via_germs(Cx delta1, Cx delta2) {
  for (Cx delta : {delta1, delta2}) {
    if (delta == Cx(0.0)) return false;
    CoefficientGerm g;
    g.k = 1;
    g.a = {Poly{Cx(0.0), delta}};
    if (!check_nondegenerate_def11(g)) return false;
  }
  return true;
}

}  // namespace ale
