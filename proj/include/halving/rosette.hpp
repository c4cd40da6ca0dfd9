#pragma once

// n+1 rotated copies of a flattened block set around the origin, optional
// circle padding, and the distance-ratio (density) check.

#include <cstdint>
#include <optional>
#include <vector>

#include "halving/artifact.hpp"
#include "halving/exact.hpp"
#include "halving/report.hpp"

namespace halving::rosette {

/// Uniform scale plus translation taking the x-range onto [1/2, 3/2].
std::vector<Point> normalize_for_lift(const std::vector<Point>& points);

/// (x, y) -> (x + 1/2, epsilon^2 y). Requires x in [1/2, 3/2].
std::vector<Point> lift(const std::vector<Point>& points, const Scalar& epsilon);

/// epsilon = 1 / (2^12 n^2).
Scalar default_epsilon(std::size_t n);

/// Rational rotation within pi/(8 copies) of 2 pi k / copies. Throws if the
/// dyadic tangent misses that budget.
Rotation copy_rotation(std::size_t k, std::size_t copies);

/// Copies k = 0..n of the lifted base (n = |lifted|), each rotated by about
/// 2 pi k / (n + 1). Claims of every copy are transplanted.
PointSetArtifact assemble_rosette(const std::vector<Point>& lifted,
                                  const std::vector<IndexTuple>& claims);

struct RosetteOptions {
  std::optional<Scalar> epsilon;  // default_epsilon when unset
  unsigned max_retries = 6;       // epsilon halvings after a failed check
};

/// normalize, lift, assemble, then certify the transplanted claims;
/// epsilon is halved on failure. The final report lands in `report`.
PointSetArtifact build_rosette(const PointSetArtifact& base, const RosetteOptions& options = {},
                               VerificationReport* report = nullptr);

/// Each transplanted line leaves n/2 whole copies on each side.
VerificationReport verify_whole_copies(const PointSetArtifact& rosette, std::size_t copy_size);

/// Adds target - |P| points on the circle of radius 3 (exact rational
/// points, in antipodal pairs), retrying with a rotated start when a new
/// point falls on a claimed line or breaks a claim.
PointSetArtifact pad_regular_polygon(const PointSetArtifact& artifact, std::size_t target,
                                     VerificationReport* report = nullptr);

/// max^2 <= gamma^2 n^{2/d} min^2, compared as (max^2/min^2)^d <= gamma^{2d} n^2.
VerificationReport density_check(const std::vector<Point>& points, const Scalar& gamma,
                                 std::size_t d);

}  // namespace halving::rosette
