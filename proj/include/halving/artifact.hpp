#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "halving/exact.hpp"

namespace halving {

/// Index tuple into a point list: 2 indices for halving lines, d for
/// halving hyperplanes.
using IndexTuple = std::vector<std::size_t>;

/// A constructed point set together with where it came from and which
/// tuples the construction claims are halving.
struct PointSetArtifact {
  std::size_t dimension = 2;
  std::vector<Point> points;
  std::string construction;
  std::map<std::string, std::string> parameters;
  std::vector<IndexTuple> claimed_halving;
  /// Indices rendered as filled markers (bold points of the recursive graphs).
  std::vector<std::size_t> bold;

  std::size_t size() const { return points.size(); }
};

}  // namespace halving
