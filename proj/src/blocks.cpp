#include "halving/blocks.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "halving/oracle.hpp"

namespace halving::blocks {

VerificationReport verify_perturbation_tolerance(const recursive::GeometricGraph& g,
                                                 const Scalar& magnitude, unsigned trials,
                                                 std::uint64_t seed) {
  const std::size_t n = g.points.size();
  const Scalar limit = make_scalar(Integer(1), ipow(Integer(n), 9));
  if (magnitude < 0 || magnitude > limit) {
    throw std::invalid_argument("perturbation magnitude must lie in [0, n^-9]");
  }
  VerificationReport report("listed segments survive horizontal perturbation");
  report.metrics["magnitude"] = magnitude.get_str();
  report.metrics["trials"] = std::to_string(trials);
  report.metrics["seed"] = std::to_string(seed);

  constexpr long kResolution = 1L << 20;
  const auto base = recursive::coordinates(g);
  for (unsigned t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    std::uniform_int_distribution<long> pick(-kResolution, kResolution);
    std::vector<Point> moved = base;
    for (auto& p : moved) p[0] += magnitude * make_scalar(pick(rng), kResolution);
    for (const auto& s : g.segments) {
      auto v = oracle::is_halving(std::span<const Point>(moved),
                                  IndexTuple{s.plain - g.point_base, s.bold - g.point_base});
      report.check(v.halving, "trial " + std::to_string(t) + ": segment " +
                                  std::to_string(s.id) + " sides " +
                                  std::to_string(v.sides.left) + "/" +
                                  std::to_string(v.sides.right));
    }
  }
  return report;
}

Scalar quantized_coordinate(const Scalar& x, unsigned long j, unsigned long n, unsigned q) {
  const Integer unit = ipow(Integer(n), q);
  return make_scalar(floor_of(x * Scalar(unit)), unit) + make_scalar(Integer(j), unit * n);
}

std::vector<Point> quantize(const std::vector<Point>& points, unsigned long n, unsigned q,
                            const std::optional<Scalar>& tolerance) {
  if (points.size() != n) throw std::invalid_argument("quantize expects exactly n points");
  if (n == 0 || q == 0) throw std::invalid_argument("quantize needs n >= 1 and Q >= 1");
  std::vector<Point> out;
  out.reserve(n);
  Scalar worst = 0;
  for (unsigned long j = 1; j <= n; ++j) {
    const Point& p = points[j - 1];
    require_dimension(p, 2, "quantize");
    Scalar x = quantized_coordinate(p.x(), j, n, q);
    worst = std::max<Scalar>(worst, abs(x - p.x()));
    out.push_back(point2(x, p.y()));
  }
  if (tolerance && !(worst < *tolerance)) {
    throw std::domain_error("quantization moves a point by " + to_decimal(worst, 12) +
                            ", not below the tolerance " + to_decimal(*tolerance, 12));
  }
  const Integer unit = ipow(Integer(n), q);
  Scalar lo = out.front().x(), hi = out.front().x();
  for (const auto& p : out) {
    lo = std::min<Scalar>(lo, p.x());
    hi = std::max<Scalar>(hi, p.x());
  }
  const Scalar shift = make_scalar(ceil_of((1 - lo) * Scalar(unit)), unit);
  if (hi + shift > 3) throw std::domain_error("quantized points do not fit in x in [1, 3]");
  for (auto& p : out) p[0] += shift;
  return out;
}

std::vector<Point> flatten(const std::vector<Point>& points, const Scalar& delta) {
  if (delta <= 0) throw std::invalid_argument("flatten needs delta > 0");
  const Scalar f = delta * delta;
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(point2(p.x(), p.y() * f));
  return out;
}

Scalar default_delta(unsigned long blocks, unsigned long n, unsigned q) {
  const Scalar cap = make_scalar(Integer(1), Integer(64) * blocks * n);
  Scalar delta = 1;
  while (delta > cap) delta /= 2;
  const Scalar budget = make_scalar(Integer(1), ipow(Integer(n), q + 1) * 4);
  const Scalar k = Scalar(Integer(blocks) + 1);
  while (8 * k * k * delta * delta + 2 * k * delta * delta * delta >= budget) delta /= 2;
  return delta;
}

BlockSet assemble_blocks(const BlockParameters& params) {
  const std::size_t n = params.base.size();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("block base needs an even point count");
  if (params.blocks < 1) throw std::invalid_argument("block count N must be >= 1");
  if (params.quant_exp < 1) throw std::invalid_argument("quantization exponent must be >= 1");

  BlockSet set;
  set.block_size = n;
  set.base_claims = params.base.claimed_halving;
  const Integer unit = ipow(Integer(n), params.quant_exp);
  const Scalar tolerance = 2 * make_scalar(Integer(1), unit);
  auto flat = quantize(params.base.points, n, params.quant_exp, tolerance);
  set.delta = params.delta ? *params.delta : default_delta(params.blocks, n, params.quant_exp);
  if (set.delta <= 0) throw std::invalid_argument("delta must be positive");
  flat = flatten(flat, set.delta);

  auto place = [&](const Rotation& rot, const Scalar& shift) {
    std::vector<Point> block;
    block.reserve(n);
    for (const auto& p : flat) block.push_back(rot.apply(point2(p.x() + shift, p.y())));
    return block;
  };
  for (unsigned long k = 0; k <= params.blocks; ++k) {
    set.positive.push_back(
        place(rational_rotation(set.delta * k), make_scalar(Integer(k), unit)));
  }
  for (unsigned long k = 0; k < params.blocks; ++k) {
    Rotation rot = half_turn().after(rational_rotation(set.delta * (2 * k + 1) / 2));
    set.negative.push_back(place(rot, make_scalar(Integer(k), unit)));
  }

  set.scale = make_scalar(unit, Integer(6) * params.blocks);
  PointSetArtifact& art = set.artifact;
  art.dimension = 2;
  art.construction = "blocks";
  art.parameters = {{"base_construction", params.base.construction},
                    {"base_size", std::to_string(n)},
                    {"blocks", std::to_string(params.blocks)},
                    {"quant_exp", std::to_string(params.quant_exp)},
                    {"delta", set.delta.get_str()},
                    {"scale", set.scale.get_str()}};
  for (const auto& [k, v] : params.base.parameters) art.parameters["base." + k] = v;
  std::size_t block_index = 0;
  auto append = [&](std::vector<Point>& block) {
    for (auto& p : block) {
      p = point2(p.x() * set.scale, p.y() * set.scale);
      art.points.push_back(p);
    }
    const std::size_t off = block_index * n;
    for (const auto& c : set.base_claims) {
      IndexTuple t;
      for (auto i : c) t.push_back(off + i);
      art.claimed_halving.push_back(std::move(t));
    }
    for (auto b : params.base.bold) art.bold.push_back(off + b);
    ++block_index;
  };
  for (auto& b : set.positive) append(b);
  for (auto& b : set.negative) append(b);
  return set;
}

VerificationReport verify_whole_blocks(const BlockSet& set) {
  VerificationReport report("block lines have equally many whole blocks on each side");
  std::vector<const std::vector<Point>*> all;
  for (const auto& b : set.positive) all.push_back(&b);
  for (const auto& b : set.negative) all.push_back(&b);
  const std::size_t others = all.size() - 1;
  for (std::size_t b = 0; b < all.size(); ++b) {
    for (const auto& c : set.base_claims) {
      const Point& u = (*all[b])[c.at(0)];
      const Point& v = (*all[b])[c.at(1)];
      std::size_t left = 0, right = 0, split = 0;
      for (std::size_t o = 0; o < all.size(); ++o) {
        if (o == b) continue;
        bool pos = true, neg = true;
        for (const auto& p : *all[o]) {
          int s = orientation(u, v, p);
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
      report.check(split == 0 && left == right && left * 2 == others,
                   "block " + std::to_string(b) + " pair (" + std::to_string(c[0]) + "," +
                       std::to_string(c[1]) + "): whole blocks " + std::to_string(left) + "/" +
                       std::to_string(right) + ", split " + std::to_string(split));
    }
  }
  return report;
}

VerificationReport x_spacing_report(const BlockSet& set) {
  VerificationReport report("union x-spacing at least 1/(12 n N)");
  auto [lo, hi] = recursive::x_gap_range(set.artifact.points);
  const unsigned long blocks = set.negative.size();
  const Scalar bound = make_scalar(Integer(1), Integer(12) * set.block_size * blocks);
  report.check(lo >= bound, "min dx " + to_decimal(lo) + " below " + bound.get_str());
  report.metrics["min_dx"] = lo.get_str();
  report.metrics["max_dx"] = hi.get_str();
  report.metrics["min_dx_bound"] = bound.get_str();
  return report;
}

PointSetArtifact pad_to_count(const PointSetArtifact& artifact, std::size_t target,
                              VerificationReport* report) {
  if (artifact.dimension != 2) throw std::invalid_argument("padding is planar");
  if (target % 2 != 0) throw std::invalid_argument("padding target must be even");
  if (target < artifact.size()) throw std::invalid_argument("padding target below current size");
  PointSetArtifact out = artifact;
  const std::size_t extra = target - artifact.size();
  if (extra % 2 != 0) throw std::invalid_argument("padding needs an even number of new points");
  const std::size_t pairs = extra / 2;
  out.parameters["padding"] = std::to_string(extra);

  if (pairs > 0) {
    if (artifact.size() < 2) throw std::invalid_argument("padding needs at least two points");
    std::vector<Scalar> xs;
    for (const auto& p : artifact.points) xs.push_back(p.x());
    std::sort(xs.begin(), xs.end());
    // The empty x-band containing 0, or the widest band when 0 is occupied.
    std::size_t gap = 0;
    bool found = false;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      if (xs[k] < 0 && xs[k + 1] > 0) {
        gap = k;
        found = true;
      }
    }
    if (!found) {
      for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
        if (xs[k + 1] - xs[k] > xs[gap + 1] - xs[gap]) gap = k;
      }
    }
    auto [spacing, range] = recursive::x_gap_range(artifact.points);
    (void)range;
    const Scalar mid = (xs[gap] + xs[gap + 1]) / 2;
    const Scalar half = (xs[gap + 1] - xs[gap]) / 2;
    // Offsets (j + 1/2) * spacing for j < pairs on both sides of mid.
    if ((Scalar(pairs) + make_scalar(1, 2)) * spacing > half) {
      throw std::domain_error("no room for " + std::to_string(extra) +
                              " padding points in the central x-band");
    }
    std::vector<Scalar> top_x, bottom_x;
    for (std::size_t j = 0; j < pairs; ++j) {
      Scalar off = (Scalar(j) + make_scalar(1, 2)) * spacing;
      top_x.push_back(mid + off);
      bottom_x.push_back(mid - off);
    }
    // Height above every claimed line at the new x positions and above all points.
    Scalar reach = 0;
    for (const auto& p : artifact.points) reach = std::max<Scalar>(reach, abs(p.y()));
    for (const auto& c : artifact.claimed_halving) {
      const Point& u = artifact.points.at(c.at(0));
      const Point& v = artifact.points.at(c.at(1));
      if (u.x() == v.x()) continue;
      const Scalar slope = (v.y() - u.y()) / (v.x() - u.x());
      for (const auto* list : {&top_x, &bottom_x}) {
        for (const auto& x : *list) reach = std::max<Scalar>(reach, abs(u.y() + slope * (x - u.x())));
      }
    }
    const Scalar height = Scalar(floor_of(reach) + 1);
    out.parameters["padding_height"] = height.get_str();
    for (std::size_t j = 0; j < pairs; ++j) {
      out.points.push_back(point2(top_x[j], height));
      out.points.push_back(point2(bottom_x[j], -height));
    }
  }
  if (report) {
    *report = oracle::verify_claimed(out);
    report->claim = "claimed lines stay halving after padding";
    auto [lo, hi] = recursive::x_gap_range(out.points);
    report->metrics["min_dx"] = lo.get_str();
    report->metrics["max_dx"] = hi.get_str();
    if (artifact.size() >= 2) {
      auto [lo0, hi0] = recursive::x_gap_range(artifact.points);
      report->check(lo >= lo0 && hi <= hi0, "padding changed the x-spacing bounds");
    }
  }
  return out;
}

}  // namespace halving::blocks
