#pragma once

// Many rotated, translated copies of one quantized and flattened base set,
// fanned around the origin so that every copy's halving lines stay halving.

#include <cstdint>
#include <optional>
#include <vector>

#include "halving/artifact.hpp"
#include "halving/exact.hpp"
#include "halving/recursive.hpp"
#include "halving/report.hpp"

namespace halving::blocks {

/// Moves every point of a diagonal graph horizontally by a seeded exact
/// rational of absolute value <= magnitude, `trials` times, and checks that
/// every listed segment stays halving. Magnitudes above |S|^-9 are rejected.
VerificationReport verify_perturbation_tolerance(const recursive::GeometricGraph& g,
                                                 const Scalar& magnitude, unsigned trials,
                                                 std::uint64_t seed);

/// floor(n^Q x) / n^Q + j / n^{Q+1}.
Scalar quantized_coordinate(const Scalar& x, unsigned long j, unsigned long n, unsigned q);

/// x'_j = floor(n^Q x_j) / n^Q + j / n^{Q+1} for j = 1..n in list order,
/// then a shift by the smallest multiple of n^-Q that puts min x at >= 1.
/// The result must fit in x <= 3. If `tolerance` is set, the largest
/// horizontal move before the shift must stay strictly below it.
std::vector<Point> quantize(const std::vector<Point>& points, unsigned long n, unsigned q,
                            const std::optional<Scalar>& tolerance = std::nullopt);

/// (x, y) -> (x, delta^2 y).
std::vector<Point> flatten(const std::vector<Point>& points, const Scalar& delta);

/// Largest power of two <= 1/(64 N n) whose rotation drift stays below a
/// quarter of the quantization unit n^-(Q+1).
Scalar default_delta(unsigned long blocks, unsigned long n, unsigned q);

struct BlockParameters {
  PointSetArtifact base;  // typically a finalized recursive graph
  unsigned long blocks = 1;
  unsigned quant_exp = 9;
  std::optional<Scalar> delta;
};

struct BlockSet {
  std::vector<std::vector<Point>> positive;  // blocks + 1 of them
  std::vector<std::vector<Point>> negative;  // blocks of them
  Scalar scale;
  Scalar delta;
  std::size_t block_size = 0;
  std::vector<IndexTuple> base_claims;
  /// Union in block order (positive 0..N, then negative 0..N-1), scaled,
  /// with every block's transplanted claims.
  PointSetArtifact artifact;
};

BlockSet assemble_blocks(const BlockParameters& params);

/// Every transplanted claimed line has `blocks` complete other blocks
/// strictly on each side.
VerificationReport verify_whole_blocks(const BlockSet& set);

/// Exact min and max pairwise x-difference of the union, plus the check
/// min >= 1/(12 n N).
VerificationReport x_spacing_report(const BlockSet& set);

/// Adds antipodal pairs (x, Y), (-x, -Y) with x in the empty band around
/// x = 0 and Y above every claimed line there, then re-verifies all claims.
/// Throws on odd targets or targets below the current size.
PointSetArtifact pad_to_count(const PointSetArtifact& artifact, std::size_t target,
                              VerificationReport* report = nullptr);

}  // namespace halving::blocks
