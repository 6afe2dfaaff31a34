#include "ale/exactgeom.hpp"

#include <cmath>

#include "ale/errors.hpp"

namespace ale {

namespace {

long common_disc(const QuadExt& x, const QuadExt& y) {
  if (x.b == 0) return y.disc;
  if (y.b == 0) return x.disc;
  if (x.disc != y.disc) throw NumericsError("QuadExt: mixed discriminants");
  return x.disc;
}

int rsign(const Rational& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}

}  // namespace

double QuadExt::to_double() const {
  return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(double(disc));
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return {x.a + y.a, x.b + y.b, common_disc(x, y)};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return {x.a - y.a, x.b - y.b, common_disc(x, y)};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  long d = common_disc(x, y);
  return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

bool operator==(const QuadExt& x, const QuadExt& y) { return sign(x - y) == 0; }

int sign(const QuadExt& x) {
  if (x.b == 0) return rsign(x.a);
  if (x.disc == 1) return rsign(x.a + x.b);
  if (x.a == 0) return rsign(x.b);
  int sa = rsign(x.a), sb = rsign(x.b);
  if (sa == sb) return sa;
  Rational lhs = x.a * x.a, rhs = x.b * x.b * x.disc;
  if (lhs == rhs) return 0;  // impossible for square-free disc > 1
  return lhs > rhs ? sa : sb;
}

int orient2d(const XPoint& p, const XPoint& q, const XPoint& r) {
  QuadExt cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign(cross);
}

namespace {

// Shared segment-relation logic over an orientation/equality policy so the
// exact and tolerance-based paths cannot drift apart.
template <typename P, typename Ops>
SegmentRelation segment_relation_impl(const P& a, const P& b, const P& c, const P& d,
                                      const Ops& ops) {
  bool eq_ac = ops.eq(a, c), eq_ad = ops.eq(a, d);
  bool eq_bc = ops.eq(b, c), eq_bd = ops.eq(b, d);
  int nshare = int(eq_ac) + int(eq_ad) + int(eq_bc) + int(eq_bd);
  if (nshare >= 2) return SegmentRelation::Interior;
  if (nshare == 1) {
    const P& f1 = (eq_ac || eq_ad) ? b : a;  // free endpoint of [a,b]
    const P& f2 = (eq_ac || eq_bc) ? d : c;  // free endpoint of [c,d]
    if (ops.on_closed(a, b, f2) || ops.on_closed(c, d, f1))
      return SegmentRelation::Interior;
    return SegmentRelation::SharedEndpoint;
  }
  int o1 = ops.orient(a, b, c), o2 = ops.orient(a, b, d);
  int o3 = ops.orient(c, d, a), o4 = ops.orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::Interior;
  if (o1 == 0 && ops.on_closed(a, b, c)) return SegmentRelation::Interior;
  if (o2 == 0 && ops.on_closed(a, b, d)) return SegmentRelation::Interior;
  if (o3 == 0 && ops.on_closed(c, d, a)) return SegmentRelation::Interior;
  if (o4 == 0 && ops.on_closed(c, d, b)) return SegmentRelation::Interior;
  return SegmentRelation::Disjoint;
}

struct ExactOps {
  int orient(const XPoint& p, const XPoint& q, const XPoint& r) const {
    return orient2d(p, q, r);
  }
  bool eq(const XPoint& p, const XPoint& q) const {
    return sign(p.x - q.x) == 0 && sign(p.y - q.y) == 0;
  }
  bool on_closed(const XPoint& p, const XPoint& q, const XPoint& t) const {
    if (orient2d(p, q, t) != 0) return false;
    return sign((t.x - p.x) * (t.x - q.x)) <= 0 && sign((t.y - p.y) * (t.y - q.y)) <= 0;
  }
};

struct FPoint {
  double x, y;
};

struct FloatOps {
  double tol;
  double scale;
  int orient(const FPoint& p, const FPoint& q, const FPoint& r) const {
    double cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (std::abs(cross) <= tol * scale * scale) return 0;
    return cross > 0 ? 1 : -1;
  }
  bool eq(const FPoint& p, const FPoint& q) const {
    return std::abs(p.x - q.x) <= tol * scale && std::abs(p.y - q.y) <= tol * scale;
  }
  bool on_closed(const FPoint& p, const FPoint& q, const FPoint& t) const {
    if (orient(p, q, t) != 0) return false;
    double t2 = tol * scale * scale;
    return (t.x - p.x) * (t.x - q.x) <= t2 && (t.y - p.y) * (t.y - q.y) <= t2;
  }
};

}  // namespace

SegmentRelation segment_relation(const XPoint& a, const XPoint& b,
                                 const XPoint& c, const XPoint& d) {
  return segment_relation_impl(a, b, c, d, ExactOps{});
}

SegmentRelation segment_relation(double ax, double ay, double bx, double by,
                                 double cx, double cy, double dx, double dy,
                                 double tol) {
  double scale = 1.0;
  for (double v : {ax, ay, bx, by, cx, cy, dx, dy}) scale = std::max(scale, std::abs(v));
  FloatOps ops{tol, scale};
  return segment_relation_impl(FPoint{ax, ay}, FPoint{bx, by}, FPoint{cx, cy},
                               FPoint{dx, dy}, ops);
}

bool on_open_segment(const XPoint& a, const XPoint& b, const XPoint& p) {
  ExactOps ops;
  if (ops.eq(p, a) || ops.eq(p, b)) return false;
  return ops.on_closed(a, b, p);
}

}  // namespace ale
