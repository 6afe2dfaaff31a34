#ifndef ALE_EXACTGEOM_HPP
#define ALE_EXACTGEOM_HPP

#include "ale/rootsys.hpp"

namespace ale {

// Element a + b*sqrt(disc) of a real quadratic extension of Q.
// disc is a square-free positive integer shared by all operands of an
// expression; disc == 1 degenerates to plain rationals.
struct QuadExt {
  Rational a, b;
  long disc = 1;

  QuadExt() = default;
  QuadExt(Rational ra, Rational rb, long d) : a(std::move(ra)), b(std::move(rb)), disc(d) {}
  explicit QuadExt(Rational ra) : a(std::move(ra)), b(0), disc(1) {}

  double to_double() const;
};

QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
bool operator==(const QuadExt& x, const QuadExt& y);

// -1, 0, +1
int sign(const QuadExt& x);

struct XPoint {
  QuadExt x, y;
};

// Sign of the signed area of (p, q, r): +1 counterclockwise.
int orient2d(const XPoint& p, const XPoint& q, const XPoint& r);

enum class SegmentRelation { Disjoint, SharedEndpoint, Interior };

// Relation of the closed segments [a, b] and [c, d]. Any contact beyond a
// single shared endpoint reports Interior.
SegmentRelation segment_relation(const XPoint& a, const XPoint& b,
                                 const XPoint& c, const XPoint& d);

// Floating fallback with tolerance-based orientation.
SegmentRelation segment_relation(double ax, double ay, double bx, double by,
                                 double cx, double cy, double dx, double dy,
                                 double tol);

// True when p lies strictly inside the open segment (a, b).
bool on_open_segment(const XPoint& a, const XPoint& b, const XPoint& p);

}  // namespace ale

#endif
