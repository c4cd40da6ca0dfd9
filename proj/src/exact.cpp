#include "halving/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace halving {

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar make_scalar(long num, long den) { return make_scalar(Integer(num), Integer(den)); }

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Scalar qpow(const Scalar& base, unsigned long e) {
  return make_scalar(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

Scalar pow2(long e) {
  Integer p = ipow(Integer(2), static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? make_scalar(p, 1) : make_scalar(Integer(1), p);
}

Integer floor_of(const Scalar& v) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Scalar& v) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

std::string to_decimal(const Scalar& v, int significant) {
  if (v == 0) return "0";
  if (significant < 1) significant = 1;
  Scalar a = abs(v);
  // Find exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto pow10 = [](long k) {
    Integer p = ipow(Integer(10), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? make_scalar(p, 1) : make_scalar(Integer(1), p);
  };
  while (a >= pow10(e + 1)) ++e;
  while (a < pow10(e)) --e;
  long shift = significant - 1 - e;
  Scalar scaled = a * pow10(shift);
  Integer digits = floor_of(scaled + Scalar(1, 2));
  if (digits >= ipow(Integer(10), static_cast<unsigned long>(significant))) {
    digits /= 10;
    --shift;
  }
  std::string s = digits.get_str();
  // Value = digits * 10^-shift.
  std::string out;
  if (shift <= 0) {
    out = s + std::string(static_cast<std::size_t>(-shift), '0');
  } else if (static_cast<std::size_t>(shift) >= s.size()) {
    out = "0." + std::string(static_cast<std::size_t>(shift) - s.size(), '0') + s;
  } else {
    out = s.substr(0, s.size() - shift) + "." + s.substr(s.size() - shift);
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return v < 0 ? "-" + out : out;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

Point point2(const Scalar& x, const Scalar& y) { return Point{x, y}; }

void require_dimension(const Point& p, std::size_t d, const char* what) {
  if (p.dimension() != d) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " + std::to_string(d) +
                                ", got " + std::to_string(p.dimension()));
  }
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  require_dimension(a, 2, "segment");
  require_dimension(b, 2, "segment");
  if (a == b) throw std::invalid_argument("segment endpoints coincide");
}

namespace {

void require_non_horizontal(const Segment& s) {
  if (s.a.y() == s.b.y()) throw std::invalid_argument("horizontal segment has no extension");
}

Scalar x_at(const Segment& s, const Scalar& y) {
  return s.a.x() + (y - s.a.y()) * (s.b.x() - s.a.x()) / (s.b.y() - s.a.y());
}

}  // namespace

Strip::Strip(const Segment& s, Scalar half_width_)
    : base(extension(s)), half_width(std::move(half_width_)) {
  if (half_width <= 0) throw std::invalid_argument("strip half-width must be positive");
}

int orientation(const Point& a, const Point& b, const Point& c) {
  require_dimension(a, 2, "orientation");
  require_dimension(b, 2, "orientation");
  require_dimension(c, 2, "orientation");
  Scalar det = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  return sgn(det);
}

Segment extension(const Segment& s) {
  require_non_horizontal(s);
  for (const Point* p : {&s.a, &s.b}) {
    if (p->y() < 0 || p->y() > 1) {
      throw std::invalid_argument("extension needs endpoint y-coordinates in [0, 1]");
    }
  }
  return Segment(point2(x_at(s, 0), 0), point2(x_at(s, 1), 1));
}

Scalar horizontal_distance(const Segment& line_through, const Point& q) {
  require_dimension(q, 2, "horizontal_distance");
  require_non_horizontal(line_through);
  return abs(q.x() - x_at(line_through, q.y()));
}

bool in_alpha_strip(const Strip& strip, const Point& q) {
  require_dimension(q, 2, "in_alpha_strip");
  const Scalar& y0 = strip.base.a.y();
  const Scalar& y1 = strip.base.b.y();
  const Scalar& lo = y0 < y1 ? y0 : y1;
  const Scalar& hi = y0 < y1 ? y1 : y0;
  if (q.y() < lo || q.y() > hi) return false;
  return horizontal_distance(strip.base, q) <= strip.half_width;
}

Scalar squared_distance(const Point& a, const Point& b) {
  require_dimension(b, a.dimension(), "squared_distance");
  Scalar sum = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    Scalar d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

Point Rotation::apply(const Point& p) const {
  require_dimension(p, 2, "rotation");
  return point2(cos * p.x() - sin * p.y(), sin * p.x() + cos * p.y());
}

Rotation Rotation::after(const Rotation& o) const {
  return Rotation{cos * o.cos - sin * o.sin, sin * o.cos + cos * o.sin};
}

Rotation rational_rotation(const Scalar& t) {
  Scalar t2 = t * t;
  Scalar denom = 1 + t2;
  return Rotation{(1 - t2) / denom, 2 * t / denom};
}

Scalar dyadic_approximation(double v, int bits) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot approximate a non-finite value");
  double scaled = std::ldexp(v, bits);
  mpz_class n;
  mpz_set_d(n.get_mpz_t(), std::nearbyint(scaled));
  return make_scalar(n, ipow(Integer(2), static_cast<unsigned long>(bits)));
}

double rotation_angle(const Rotation& r) { return std::atan2(r.sin.get_d(), r.cos.get_d()); }

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<Scalar> hyperplane_normal(const std::vector<Point>& defining) {
  const std::size_t d = defining.size();
  if (d < 2) throw std::invalid_argument("hyperplane needs at least two points");
  for (const auto& p : defining) require_dimension(p, d, "hyperplane_normal");
  std::vector<std::vector<Scalar>> rows(d - 1, std::vector<Scalar>(d));
  for (std::size_t k = 1; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) rows[k - 1][j] = defining[k][j] - defining[0][j];
  }
  std::vector<Scalar> normal(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Scalar>> minor(d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) minor[r].push_back(rows[r][c]);
      }
    }
    Scalar cof = determinant(std::move(minor));
    // Cofactor of entry (d-1, j) in a d x d matrix (0-based).
    normal[j] = ((d - 1 + j) % 2 == 0) ? cof : Scalar(-cof);
  }
  return normal;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace halving
