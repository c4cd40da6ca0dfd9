#pragma once

// Planar gadgets embedded along many directions through the origin in R^d.
// Hyperplanes through a halving pair of one gadget and one point of each of
// d-2 others are nearly balanced; apex points then fix the imbalance.

#include <cstdint>
#include <optional>
#include <vector>

#include "halving/artifact.hpp"
#include "halving/exact.hpp"
#include "halving/report.hpp"

namespace halving::highdim {

enum class BlockKind { A, B };

/// Layout of the symmetric gadget. `literal` uses s_i = (1 + i/m, -eps),
/// which is the mirror image of the r-family shifted by one step; `symmetric`
/// uses s_i = (1 + (i-1)/m, -eps) = -r_{m+1-i}.
enum class BVariant { literal, symmetric };

struct PlanarBlock {
  BlockKind kind = BlockKind::A;
  std::vector<Point> points;
  std::size_t important_count = 0;  // block A: the first m points
  std::vector<IndexTuple> claims;   // block A: halving pairs of the important part
};

/// x onto [1, 2] by an affine map, y scaled so |y| < eps^3. Returns the
/// y-factor applied after the x-normalizing scale.
std::vector<Point> normalize_important(const std::vector<Point>& points, const Scalar& epsilon,
                                       Scalar* y_factor = nullptr);

/// Important part first (must already be normalized), then
/// p_i = (-2 + i/m, eps^2) and q_i = (-3/2 + i/m, -eps^2) for i = 1..m/2.
PlanarBlock block_A(const std::vector<Point>& important, const std::vector<IndexTuple>& claims,
                    const Scalar& epsilon);

/// r_i = (-2 + i/m, eps) for i = 1..m, then the s-family of the variant.
PlanarBlock block_B(std::size_t m, const Scalar& epsilon, BVariant variant = BVariant::literal);

/// Claimed pairs of block A are halving inside the block.
VerificationReport verify_block_A(const PlanarBlock& block);

struct DirectionSet {
  std::size_t dimension = 3;
  std::vector<Point> centers;  // one representative per antipodal pair
  Scalar min_separation;       // squared chord bound 1/m^2 against c and -c
  std::size_t generated = 0;   // low-discrepancy candidates examined
  std::uint64_t seed = 0;

  /// centers followed by their reflections.
  std::vector<Point> with_antipodes() const;
};

/// Greedy symmetric packing: exact rational unit vectors from a seeded,
/// jittered low-discrepancy sequence (coordinate axes first), kept when the
/// squared chord to every kept center and its antipode is >= 1/m^2. None
/// equals +-e_d and no d of them are linearly dependent (checked exactly).
DirectionSet sphere_directions(std::size_t m, std::size_t d, std::uint64_t seed,
                               std::optional<std::size_t> max_count = std::nullopt);

/// Greedy pick of `count` centers whose spans of d-1 centers are far from
/// vertical and far from every other picked center.
std::vector<Point> select_directions(const DirectionSet& set, std::size_t count,
                                     const Scalar& epsilon);

enum class Role { important, unimportant, symmetric, apex };

struct SpatialAssembly {
  std::size_t dimension = 3;
  std::size_t m = 0;
  Scalar epsilon;
  std::vector<Point> points;
  std::vector<std::size_t> block_of;  // block id per point (apex: SIZE_MAX)
  std::vector<Role> role;
  std::vector<BlockKind> block_kind;
  std::vector<Point> axes;            // per block
  std::vector<Point> plane_dirs;      // per block, unit and orthogonal to the axis
  /// Per A block: global index pairs of the important halving pairs.
  std::vector<std::vector<IndexTuple>> a_claims;
  std::vector<std::size_t> apex;      // indices of apex points
  long jitter_exponent = 0;           // jitter magnitude <= 2^-jitter_exponent per coordinate
  unsigned jitter_retries = 0;
  bool reflected = false;
};

struct AssemblyOptions {
  std::size_t a_blocks = 2;
  std::size_t b_blocks = 2;
  BVariant b_variant = BVariant::symmetric;
  std::uint64_t seed = 1;
  std::size_t general_position_threshold = 60;
};

/// Embeds A blocks along the first directions and B blocks along the next,
/// each in a plane through its axis that avoids every other axis, then
/// applies seeded jitter until the set is in general position.
SpatialAssembly assemble(std::size_t d, std::size_t m, const Scalar& epsilon,
                         const std::vector<Point>& directions, const PlanarBlock& a_template,
                         const AssemblyOptions& options = {});

/// Pair from one A block, one point from each of d-2 distinct B blocks.
std::vector<IndexTuple> candidates(const SpatialAssembly& assembly);

/// A * pairs * C(B, d-2) * (2m)^{d-2}.
Integer expected_candidate_count(const SpatialAssembly& assembly);

struct DiffResult {
  long above = 0;
  long below = 0;
  long on = 0;  // beyond the defining points
  long diff() const { return above - below; }
};

/// Above/below along the last coordinate. Throws on affinely dependent
/// defining points or a hyperplane parallel to the last axis.
DiffResult diff_of_hyperplane(const std::vector<Point>& points, const std::vector<Point>& defining);
DiffResult diff_of_hyperplane(const std::vector<Point>& points, const IndexTuple& tuple);

struct ParityFix {
  SpatialAssembly assembly;
  long majority = 0;  // after the optional reflection, always <= 0
  std::vector<IndexTuple> retained;
  std::vector<long> diffs_before;  // per candidate, before reflection
};

/// Most frequent diff x (ties toward smaller |x|, then negative); reflects
/// the last coordinate when x > 0, then adds |x| apex points on the last axis.
ParityFix parity_fix(const SpatialAssembly& assembly);

/// Final point set with the retained candidates as claims.
PointSetArtifact to_artifact(const ParityFix& fix);

/// Important part for block A: the finalized diagonal graph with m points.
PointSetArtifact important_base(std::size_t m);

struct Pipeline {
  PlanarBlock a_template;
  DirectionSet directions;
  std::vector<Point> chosen;
  SpatialAssembly assembly;
  std::vector<IndexTuple> candidate_list;
  std::vector<long> diffs;
  ParityFix fix;
  PointSetArtifact artifact;
};

/// Default epsilon 2^-(2 + ceil(log2 m)).
Scalar default_epsilon(std::size_t m);

Pipeline run_pipeline(std::size_t d, std::size_t m, std::uint64_t seed,
                      const AssemblyOptions& options = {},
                      std::optional<Scalar> epsilon = std::nullopt);

}  // namespace halving::highdim
