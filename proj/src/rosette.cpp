#include "halving/rosette.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "halving/oracle.hpp"

namespace halving::rosette {

std::vector<Point> normalize_for_lift(const std::vector<Point>& points) {
  if (points.size() < 2) throw std::invalid_argument("normalize needs at least two points");
  Scalar lo = points.front().x(), hi = lo;
  for (const auto& p : points) {
    require_dimension(p, 2, "normalize_for_lift");
    lo = std::min<Scalar>(lo, p.x());
    hi = std::max<Scalar>(hi, p.x());
  }
  if (lo == hi) throw std::invalid_argument("normalize needs distinct x-coordinates");
  const Scalar f = 1 / (hi - lo);
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(point2((p.x() - lo) * f + make_scalar(1, 2), p.y() * f));
  return out;
}

std::vector<Point> lift(const std::vector<Point>& points, const Scalar& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("lift needs epsilon > 0");
  const Scalar lo = make_scalar(1, 2), hi = make_scalar(3, 2);
  const Scalar e2 = epsilon * epsilon;
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    require_dimension(p, 2, "lift");
    if (p.x() < lo || p.x() > hi) throw std::domain_error("lift needs x in [1/2, 3/2]");
    out.push_back(point2(p.x() + lo, p.y() * e2));
  }
  return out;
}

Scalar default_epsilon(std::size_t n) {
  return make_scalar(Integer(1), Integer(4096) * n * n);
}

Rotation copy_rotation(std::size_t k, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("copy rotation needs at least one copy");
  const double pi = std::numbers::pi;
  double theta = 2 * pi * static_cast<double>(k % copies) / static_cast<double>(copies);
  if (theta > pi) theta -= 2 * pi;
  // Keep the tangent bounded: far angles go through a half turn.
  bool flip = std::abs(theta) > pi / 2;
  double rest = flip ? (theta > 0 ? theta - pi : theta + pi) : theta;
  int bits = 20 + static_cast<int>(std::ceil(std::log2(static_cast<double>(copies) + 1)));
  Rotation r = rational_rotation(dyadic_approximation(std::tan(rest / 2), bits));
  if (flip) r = half_turn().after(r);
  double err = std::abs(std::remainder(rotation_angle(r) - theta, 2 * pi));
  if (err >= pi / (8.0 * static_cast<double>(copies))) {
    throw std::domain_error("rational copy rotation misses its angular budget");
  }
  return r;
}

PointSetArtifact assemble_rosette(const std::vector<Point>& lifted,
                                  const std::vector<IndexTuple>& claims) {
  const std::size_t n = lifted.size();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("rosette base needs an even point count");
  PointSetArtifact art;
  art.dimension = 2;
  art.construction = "rosette";
  art.parameters["copy_size"] = std::to_string(n);
  art.parameters["copies"] = std::to_string(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rotation r = copy_rotation(k, n + 1);
    for (const auto& p : lifted) art.points.push_back(k == 0 ? p : r.apply(p));
    for (const auto& c : claims) {
      IndexTuple t;
      for (auto i : c) t.push_back(k * n + i);
      art.claimed_halving.push_back(std::move(t));
    }
  }
  auto sorted = art.points;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::domain_error("rosette copies overlap");
  }
  return art;
}

VerificationReport verify_whole_copies(const PointSetArtifact& rosette, std::size_t copy_size) {
  VerificationReport report("copy lines have equally many whole copies on each side");
  if (copy_size == 0) throw std::invalid_argument("copy size must be positive");
  const std::size_t copies = rosette.size() / copy_size;
  const auto& P = rosette.points;
  for (const auto& c : rosette.claimed_halving) {
    const std::size_t home = c.at(0) / copy_size;
    if (home >= copies) continue;  // padding points carry no claims
    std::size_t left = 0, right = 0, split = 0;
    for (std::size_t o = 0; o < copies; ++o) {
      if (o == home) continue;
      bool pos = true, neg = true;
      for (std::size_t k = o * copy_size; k < (o + 1) * copy_size; ++k) {
        int s = orientation(P[c[0]], P[c[1]], P[k]);
        pos = pos && s > 0;
        neg = neg && s < 0;
      }
      if (pos) {
        ++left;
      } else if (neg) {
        ++right;
      } else {
        ++split;
      }
    }
    report.check(split == 0 && left == right && 2 * left + 1 == copies,
                 "pair (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "): whole copies " +
                     std::to_string(left) + "/" + std::to_string(right) + ", split " +
                     std::to_string(split));
  }
  return report;
}

PointSetArtifact build_rosette(const PointSetArtifact& base, const RosetteOptions& options,
                               VerificationReport* report) {
  Scalar eps = options.epsilon ? *options.epsilon : default_epsilon(base.size());
  const auto normalized = normalize_for_lift(base.points);
  for (unsigned attempt = 0;; ++attempt) {
    PointSetArtifact art = assemble_rosette(lift(normalized, eps), base.claimed_halving);
    for (const auto& [k, v] : base.parameters) art.parameters["base." + k] = v;
    art.parameters["base_construction"] = base.construction;
    art.parameters["epsilon"] = eps.get_str();
    art.parameters["retries"] = std::to_string(attempt);
    VerificationReport rep = oracle::verify_claimed(art);
    rep.merge(verify_whole_copies(art, base.size()));
    rep.claim = "rosette copies keep their halving lines";
    rep.metrics["epsilon"] = eps.get_str();
    rep.metrics["retries"] = std::to_string(attempt);
    if (rep.passed() || attempt >= options.max_retries) {
      if (report) *report = rep;
      return art;
    }
    eps /= 2;
  }
}

PointSetArtifact pad_regular_polygon(const PointSetArtifact& artifact, std::size_t target,
                                     VerificationReport* report) {
  if (artifact.dimension != 2) throw std::invalid_argument("polygon padding is planar");
  if (target < artifact.size()) throw std::invalid_argument("padding target below current size");
  if (target % 2 != 0) throw std::invalid_argument("padding target must be even");
  const std::size_t extra = target - artifact.size();
  if (auto it = artifact.parameters.find("copy_size"); it != artifact.parameters.end()) {
    const std::size_t n = std::stoul(it->second);
    if (extra >= 4 * n + 6) throw std::invalid_argument("polygon padding must add fewer than 4n+6 points");
  }
  if (extra == 0) {
    if (report) *report = oracle::verify_claimed(artifact);
    return artifact;
  }
  constexpr unsigned kRetries = 16;
  const double pi = std::numbers::pi;
  for (unsigned attempt = 0; attempt < kRetries; ++attempt) {
    PointSetArtifact out = artifact;
    const double offset = attempt * pi / (3.0 * static_cast<double>(extra) * kRetries);
    bool clean = true;
    for (std::size_t j = 0; j < extra / 2 && clean; ++j) {
      double phi = offset + 2 * pi * static_cast<double>(j) / static_cast<double>(extra);
      Rotation r = rational_rotation(dyadic_approximation(std::tan(phi / 2), 24));
      Point v = r.apply(point2(3, 0));
      Point w = point2(-v.x(), -v.y());
      for (const Point* p : {&v, &w}) {
        if (std::find(out.points.begin(), out.points.end(), *p) != out.points.end()) clean = false;
        for (const auto& c : artifact.claimed_halving) {
          if (orientation(artifact.points[c[0]], artifact.points[c[1]], *p) == 0) clean = false;
        }
      }
      out.points.push_back(v);
      out.points.push_back(w);
    }
    if (!clean) continue;
    VerificationReport rep = oracle::verify_claimed(out);
    rep.claim = "claimed lines stay halving after polygon padding";
    rep.metrics["polygon_points"] = std::to_string(extra);
    rep.metrics["retries"] = std::to_string(attempt);
    if (!rep.passed()) continue;
    out.parameters["polygon_points"] = std::to_string(extra);
    if (report) *report = rep;
    return out;
  }
  throw std::domain_error("polygon padding could not avoid the claimed lines");
}

VerificationReport density_check(const std::vector<Point>& points, const Scalar& gamma,
                                 std::size_t d) {
  VerificationReport report("max/min distance ratio at most gamma n^(1/d)");
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("density needs at least two points");
  if (d < 1) throw std::invalid_argument("density needs d >= 1");
  if (gamma <= 0) throw std::invalid_argument("density needs gamma > 0");
  Scalar lo = squared_distance(points[0], points[1]), hi = lo;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar s = squared_distance(points[i], points[j]);
      if (s < lo) lo = s;
      if (s > hi) hi = s;
    }
  }
  report.metrics["min_sq"] = lo.get_str();
  report.metrics["max_sq"] = hi.get_str();
  report.metrics["points"] = std::to_string(n);
  report.metrics["gamma"] = gamma.get_str();
  report.metrics["bound"] = std::to_string(gamma.get_d() * std::pow(static_cast<double>(n), 1.0 / d));
  if (lo == 0) {
    report.fail("coincident points");
    return report;
  }
  report.metrics["ratio"] = std::to_string(std::sqrt(Scalar(hi / lo).get_d()));
  const Scalar lhs = qpow(hi / lo, d);
  const Scalar rhs = qpow(gamma * gamma, d) * Scalar(Integer(n) * n);
  report.check(lhs <= rhs, "ratio " + report.metrics["ratio"] + " exceeds " + report.metrics["bound"]);
  return report;
}

}  // namespace halving::rosette
