#pragma once

#include <string>

#include "halving/artifact.hpp"
#include "halving/report.hpp"

namespace halving::io {

inline constexpr int kSchemaVersion = 1;

/// Document text: coordinates as [numerator, denominator] decimal strings.
std::string to_json(const PointSetArtifact& artifact);

/// Throws std::invalid_argument on malformed documents (bad version, count
/// mismatch, non-positive denominators, ragged dimensions, bad indices).
PointSetArtifact from_json(const std::string& text);

/// `idx,x_num,x_den,y_num,y_den[,...]`; with `approx`, one lossy decimal
/// column per axis is appended.
std::string to_csv(const PointSetArtifact& artifact, bool approx = false);

std::string report_json(const VerificationReport& report);

struct SvgOptions {
  double size = 1000;
  double margin = 40;
  double radius = 4;
  bool draw_claims = true;
};

/// Deterministic SVG 1.1. Bold indices are filled circles, the rest hollow;
/// claimed pairs become lines. Dimension 3 uses a fixed axonometric
/// projection; higher dimensions are rejected.
std::string to_svg(const PointSetArtifact& artifact, const SvgOptions& options = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace halving::io
