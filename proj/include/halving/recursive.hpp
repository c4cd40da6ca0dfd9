#pragma once

// The recursive planar graphs: a two-point seed refined level by level into
// point sets whose listed plain-bold segments are all halving.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "halving/artifact.hpp"
#include "halving/exact.hpp"
#include "halving/report.hpp"

namespace halving::recursive {

enum class Kind { plain, bold };

struct TaggedPoint {
  std::size_t id = 0;  // unique across the whole chain
  Point point;
  Kind kind = Kind::plain;
  unsigned level = 0;
  std::optional<std::size_t> parent;
  std::optional<std::size_t> assigned_segment;  // bold points above level 0
};

struct SegmentRecord {
  std::size_t id = 0;  // unique across the whole chain
  std::size_t plain = 0;
  std::size_t bold = 0;
  unsigned level = 0;
  std::optional<std::size_t> parent;
};

/// One level of the refinement. Ids are global within a chain; the level's
/// own ids are contiguous from point_base / segment_base.
struct GeometricGraph {
  unsigned order = 0;
  unsigned index = 0;
  std::size_t point_base = 0;
  std::size_t segment_base = 0;
  std::vector<TaggedPoint> points;
  std::vector<SegmentRecord> segments;

  const TaggedPoint& point(std::size_t id) const { return points.at(id - point_base); }
  const SegmentRecord& segment(std::size_t id) const { return segments.at(id - segment_base); }
  std::size_t bold_count() const;
};

/// Levels 0..i of a single order, in level order.
using Chain = std::vector<GeometricGraph>;

struct Parameters {
  Integer progression;  // points per plain parent
  Scalar step;          // spacing inside a progression
  Scalar spread;        // progression * step
};

/// Throws std::invalid_argument unless 1 <= i <= o.
Parameters recursion_parameters(unsigned o, unsigned i);

/// Same formulas without the i <= o restriction; the strip widths of the top
/// level need the parameters one level past the order.
Parameters raw_parameters(unsigned o, unsigned i);

/// alpha = 2^{i+2} * spread_{i+1}: half-width of the strip around a level-i segment.
Scalar strip_half_width(unsigned o, unsigned i);

Chain build_chain(unsigned o, unsigned i);
GeometricGraph build(unsigned o, unsigned i);

VerificationReport verify_halving_all(const GeometricGraph& g);

/// Extensions of all descendant segments stay inside the alpha-strip.
VerificationReport verify_claim_strip_containment(const Chain& chain);

/// Points that are neither endpoints nor descendants of a segment stay out
/// of its 2 alpha strip, at every later level.
VerificationReport verify_claim_strip_exclusion(const Chain& chain);

/// Being below a segment's line survives one refinement step.
VerificationReport verify_side_preservation(const Chain& chain);

/// 7/8 <= dx/dy <= 9/8 for every non-horizontal pair.
VerificationReport verify_slopes(const GeometricGraph& g);

/// Diagonal graph with x scaled by 8/9; claimed pairs are the graph's
/// segments as (plain, bold) indices into the point list. The Delta-x scan
/// lands in `report` when given.
PointSetArtifact finalize_diagonal(const GeometricGraph& g, VerificationReport* report = nullptr);

/// Plain point list of a graph, in id order.
std::vector<Point> coordinates(const GeometricGraph& g);

/// Smallest and largest difference between distinct sorted x-coordinates
/// (min over consecutive pairs, max = range). Throws on fewer than 2 points.
std::pair<Scalar, Scalar> x_gap_range(const std::vector<Point>& points);

}  // namespace halving::recursive
