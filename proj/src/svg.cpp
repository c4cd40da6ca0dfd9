#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "halving/io.hpp"

namespace halving::io {

namespace {

// Cabinet-style projection for 3D: u = x + 2y/5, v = z + 3y/10.
std::pair<Scalar, Scalar> project(const Point& p) {
  if (p.dimension() == 2) return {p[0], p[1]};
  return {p[0] + p[1] * make_scalar(2, 5), p[2] + p[1] * make_scalar(3, 10)};
}

}  // namespace

std::string to_svg(const PointSetArtifact& artifact, const SvgOptions& options) {
  if (artifact.dimension < 2 || artifact.dimension > 3) {
    throw std::invalid_argument("SVG output supports dimension 2 or 3 only");
  }
  std::vector<std::pair<Scalar, Scalar>> uv;
  for (const auto& p : artifact.points) {
    require_dimension(p, artifact.dimension, "to_svg");
    uv.push_back(project(p));
  }
  Scalar umin = 0, umax = 0, vmin = 0, vmax = 0;
  if (!uv.empty()) {
    umin = umax = uv[0].first;
    vmin = vmax = uv[0].second;
  }
  for (const auto& [u, v] : uv) {
    umin = std::min<Scalar>(umin, u);
    umax = std::max<Scalar>(umax, u);
    vmin = std::min<Scalar>(vmin, v);
    vmax = std::max<Scalar>(vmax, v);
  }
  Scalar span = std::max<Scalar>(umax - umin, vmax - vmin);
  if (span == 0) span = 1;
  const Scalar size = dyadic_approximation(options.size, 8);
  const Scalar margin = dyadic_approximation(options.margin, 8);
  const Scalar scale = (size - 2 * margin) / span;
  // Centre the drawing; SVG's y axis points down.
  const Scalar du = (size - (umax - umin) * scale) / 2;
  const Scalar dv = (size - (vmax - vmin) * scale) / 2;
  auto px = [&](const Scalar& u) { return to_decimal(du + (u - umin) * scale, 30); };
  auto py = [&](const Scalar& v) { return to_decimal(size - dv - (v - vmin) * scale, 30); };

  std::vector<bool> bold(artifact.size(), false);
  for (auto i : artifact.bold) {
    if (i < bold.size()) bold[i] = true;
  }
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size
     << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size << " "
     << options.size << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << options.size << "\" height=\"" << options.size
     << "\" fill=\"white\"/>\n";
  if (options.draw_claims) {
    os << "<g stroke=\"#1f4e9c\" stroke-width=\"0.6\" fill=\"none\">\n";
    for (const auto& t : artifact.claimed_halving) {
      if (t.size() == 2) {
        os << "<line x1=\"" << px(uv[t[0]].first) << "\" y1=\"" << py(uv[t[0]].second)
           << "\" x2=\"" << px(uv[t[1]].first) << "\" y2=\"" << py(uv[t[1]].second) << "\"/>\n";
      } else {
        os << "<polygon points=\"";
        for (std::size_t k = 0; k < t.size(); ++k) {
          os << (k ? " " : "") << px(uv[t[k]].first) << "," << py(uv[t[k]].second);
        }
        os << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < uv.size(); ++i) {
    os << "<circle cx=\"" << px(uv[i].first) << "\" cy=\"" << py(uv[i].second) << "\" r=\""
       << options.radius << "\" fill=\"" << (bold[i] ? "black" : "white") << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace halving::io
