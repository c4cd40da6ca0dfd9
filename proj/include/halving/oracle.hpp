#pragma once

// Independent halving certification from coordinates alone. Nothing in this
// header knows about how a point set was constructed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "halving/artifact.hpp"
#include "halving/exact.hpp"
#include "halving/report.hpp"

namespace halving::oracle {

struct SideCounts {
  std::size_t left = 0;   // positive side
  std::size_t right = 0;  // negative side
  std::size_t on = 0;     // on the line/hyperplane, excluding the defining points

  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

struct OracleResult {
  std::size_t halving_count = 0;
  /// Sorted ascending, each tuple sorted ascending.
  std::vector<IndexTuple> halving_pairs;
  /// Parallel to halving_pairs.
  std::vector<SideCounts> side_counts;
  /// Number of (tuple, point) incidences beyond the defining points.
  std::size_t degenerate_incidences = 0;
  /// A few tuples with extra incident points, each followed by the offender.
  std::vector<IndexTuple> degeneracy_witnesses;
};

/// O(n^3): every pair, every third point.
OracleResult count_halving_lines_naive(std::span<const Point> points);

/// O(n^2 log n): angular sort around each point.
OracleResult count_halving_lines_sweep(std::span<const Point> points);

/// O(n^{d+1}): every d-tuple, every remaining point.
OracleResult count_halving_hyperplanes(std::span<const Point> points, std::size_t d);

struct HalvingVerdict {
  bool halving = false;
  SideCounts sides;
};

/// Points of `all` equal to a defining point are skipped. Throws
/// std::invalid_argument if the defining points are affinely dependent.
HalvingVerdict is_halving(std::span<const Point> defining, std::span<const Point> all);

/// Index form: the tuple selects the defining points out of `all`.
HalvingVerdict is_halving(std::span<const Point> all, const IndexTuple& tuple);

struct GeneralPositionOptions {
  std::size_t exhaustive_threshold_2d = 60;
  std::size_t exhaustive_threshold_3d = 30;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
};

/// No d+1 points on a common hyperplane. Exhaustive below the threshold for
/// the dimension, seeded sampling above it (sample size lands in metrics).
VerificationReport general_position_check(std::span<const Point> points, std::size_t d,
                                          const GeneralPositionOptions& options = {});

/// Certify every claimed tuple of an artifact with is_halving.
VerificationReport verify_claimed(const PointSetArtifact& artifact);

/// Worker count for the parallel oracles: HALVING_LAB_THREADS if set and
/// positive, otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace halving::oracle
