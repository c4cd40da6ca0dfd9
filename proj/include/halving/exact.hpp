#pragma once

// Exact rational kernel: scalars, points, segments and the planar predicates
// used by every construction and oracle. Nothing here touches floating point
// except the explicit display conversions.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace halving {

/// Arbitrary-precision rational. gmpxx keeps the value canonical (lowest
/// terms, positive denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Build a canonical rational num/den. Throws std::domain_error if den == 0.
Scalar make_scalar(const Integer& num, const Integer& den = 1);
Scalar make_scalar(long num, long den = 1);

/// 2^e for any integer e (negative exponents give 1/2^|e|).
Scalar pow2(long e);
/// base^e for e >= 0.
Integer ipow(const Integer& base, unsigned long e);
Scalar qpow(const Scalar& base, unsigned long e);

/// floor of a rational as an integer.
Integer floor_of(const Scalar& v);
/// ceil of a rational as an integer.
Integer ceil_of(const Scalar& v);

/// Decimal rendering with `significant` significant digits, rounded half away
/// from zero. Display only.
std::string to_decimal(const Scalar& v, int significant = 30);

struct Point {
  std::vector<Scalar> coords;

  Point() = default;
  explicit Point(std::vector<Scalar> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Scalar> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  const Scalar& x() const { return coords.at(0); }
  const Scalar& y() const { return coords.at(1); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic order, for canonical sorting and duplicate detection.
bool lex_less(const Point& a, const Point& b);

Point point2(const Scalar& x, const Scalar& y);

struct Segment {
  Point a;
  Point b;

  /// Throws std::invalid_argument if a == b or the endpoints are not 2D.
  Segment(Point a_, Point b_);
};

/// Horizontal-distance strip around the extension of a segment.
struct Strip {
  Segment base;      // already extended to span y in [0, 1]
  Scalar half_width;

  /// Extends `s` and validates half_width > 0.
  Strip(const Segment& s, Scalar half_width_);
};

/// Sign of det(b - a, c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// The segment's line clipped to the slab 0 <= y <= 1, returned with the
/// y = 0 endpoint first. Throws std::invalid_argument for horizontal
/// segments and for endpoints outside the slab.
Segment extension(const Segment& s);

/// |x(q) - x(l)| where l is the point of the segment's line at height y(q).
Scalar horizontal_distance(const Segment& line_through, const Point& q);

/// q lies in the closed slab spanned by the strip's base and is within
/// horizontal distance half_width of its line.
bool in_alpha_strip(const Strip& strip, const Point& q);

Scalar squared_distance(const Point& a, const Point& b);

/// Rotation matrix built from a tangent-half-angle parameter t:
/// cos = (1 - t^2) / (1 + t^2), sin = 2t / (1 + t^2). Determinant is exactly 1.
struct Rotation {
  Scalar cos;
  Scalar sin;

  Point apply(const Point& p) const;
  Scalar determinant() const { return cos * cos + sin * sin; }
  /// Composition: (*this) after `other`.
  Rotation after(const Rotation& other) const;
};

Rotation rational_rotation(const Scalar& t);
/// Rotation by pi.
inline Rotation half_turn() { return Rotation{Scalar(-1), Scalar(0)}; }

/// Nearest rational p / 2^bits to a double (round to nearest).
Scalar dyadic_approximation(double v, int bits);

/// Approximate angle of a rotation, for diagnostics only.
double rotation_angle(const Rotation& r);

/// Determinant of a square matrix by Gaussian elimination with exact pivots.
Scalar determinant(std::vector<std::vector<Scalar>> rows);

/// Normal vector of the hyperplane through d points in R^d, as the cofactor
/// expansion of det[p_2 - p_1, ..., p_d - p_1, x - p_1] along its last row.
/// So sign(normal . (q - p_1)) is the orientation of (p_1, ..., p_d, q).
/// All-zero when the points are affinely dependent.
std::vector<Scalar> hyperplane_normal(const std::vector<Point>& defining);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Throws std::invalid_argument if points disagree in dimension.
void require_dimension(const Point& p, std::size_t d, const char* what);

}  // namespace halving
