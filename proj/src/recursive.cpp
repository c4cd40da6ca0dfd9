#include "halving/recursive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "halving/oracle.hpp"

namespace halving::recursive {

std::size_t GeometricGraph::bold_count() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const auto& p) { return p.kind == Kind::bold; }));
}

Parameters raw_parameters(unsigned o, unsigned i) {
  Parameters p;
  p.progression = ipow(Integer(2), i);
  p.step = pow2(-static_cast<long>((4 * o + 4) * i));
  p.spread = pow2(-static_cast<long>((4 * o + 3) * i));
  return p;
}

Parameters recursion_parameters(unsigned o, unsigned i) {
  if (i < 1 || i > o) {
    throw std::invalid_argument("recursion parameters need 1 <= i <= o (got o=" +
                                std::to_string(o) + ", i=" + std::to_string(i) + ")");
  }
  return raw_parameters(o, i);
}

Scalar strip_half_width(unsigned o, unsigned i) {
  return pow2(static_cast<long>(i) + 2) * raw_parameters(o, i + 1).spread;
}

namespace {

GeometricGraph seed(unsigned o) {
  GeometricGraph g;
  g.order = o;
  g.points.push_back({0, point2(1, 1), Kind::plain, 0, std::nullopt, std::nullopt});
  g.points.push_back({1, point2(0, 0), Kind::bold, 0, std::nullopt, std::nullopt});
  g.segments.push_back({0, 0, 1, 0, std::nullopt});
  return g;
}

GeometricGraph refine(const GeometricGraph& prev) {
  const unsigned level = prev.index + 1;
  const Parameters par = recursion_parameters(prev.order, level);
  const long a = par.progression.get_si();

  GeometricGraph g;
  g.order = prev.order;
  g.index = level;
  g.point_base = prev.point_base + prev.points.size();
  g.segment_base = prev.segment_base + prev.segments.size();

  // First child id of every previous point, so segments can find p^(k), b^(k).
  std::vector<std::size_t> first_child(prev.points.size());
  for (std::size_t local = 0; local < prev.points.size(); ++local) {
    const TaggedPoint& parent = prev.points[local];
    first_child[local] = g.point_base + g.points.size();
    const bool bold = parent.kind == Kind::bold;
    const long count = bold ? a + 1 : a;
    for (long k = 0; k < count; ++k) {
      Scalar shift = par.step * k;
      Scalar x = bold ? Scalar(parent.point.x() - shift) : Scalar(parent.point.x() + shift);
      g.points.push_back({g.point_base + g.points.size(), point2(x, parent.point.y()), Kind::plain,
                          level, parent.id, std::nullopt});
    }
  }

  for (const SegmentRecord& s : prev.segments) {
    const TaggedPoint& p = prev.point(s.plain);
    const TaggedPoint& b = prev.point(s.bold);
    Point qpt = point2((p.point.x() + b.point.x()) / 2 - par.step / 4,
                       (p.point.y() + b.point.y()) / 2);
    const std::size_t qid = g.point_base + g.points.size();
    g.points.push_back({qid, std::move(qpt), Kind::bold, level, b.id, s.id});

    const std::size_t p0 = first_child[s.plain - prev.point_base];
    const std::size_t b0 = first_child[s.bold - prev.point_base];
    for (long k = 0; k < a; ++k) {
      g.segments.push_back({g.segment_base + g.segments.size(), p0 + static_cast<std::size_t>(k),
                            qid, level, s.id});
    }
    for (long k = 0; k <= a; ++k) {
      g.segments.push_back({g.segment_base + g.segments.size(), b0 + static_cast<std::size_t>(k),
                            qid, level, s.id});
    }
  }
  return g;
}

std::string point_tag(const TaggedPoint& p) {
  return "point " + std::to_string(p.id) + " (level " + std::to_string(p.level) + ")";
}

std::string segment_tag(const SegmentRecord& s) {
  return "segment " + std::to_string(s.id) + " (level " + std::to_string(s.level) + ")";
}

Segment geometry(const Chain& chain, const SegmentRecord& s) {
  const GeometricGraph& g = chain.at(s.level);
  return Segment(g.point(s.plain).point, g.point(s.bold).point);
}

// Segment ids of every descendant of `s`, grouped by level (index 0 = s.level + 1).
std::vector<std::vector<std::size_t>> descendant_segments(const Chain& chain,
                                                          const SegmentRecord& s) {
  std::vector<std::vector<std::size_t>> out;
  std::set<std::size_t> frontier{s.id};
  for (unsigned level = s.level + 1; level < chain.size(); ++level) {
    std::vector<std::size_t> next;
    for (const auto& r : chain[level].segments) {
      if (r.parent && frontier.count(*r.parent)) next.push_back(r.id);
    }
    frontier = std::set<std::size_t>(next.begin(), next.end());
    out.push_back(std::move(next));
  }
  return out;
}

void require_chain(const Chain& chain) {
  for (std::size_t l = 0; l < chain.size(); ++l) {
    if (chain[l].index != l || chain[l].order != chain.front().order) {
      throw std::invalid_argument("chain levels must be consecutive from 0 with one order");
    }
  }
}

}  // namespace

Chain build_chain(unsigned o, unsigned i) {
  if (i > o) {
    throw std::invalid_argument("build needs i <= o (got o=" + std::to_string(o) +
                                ", i=" + std::to_string(i) + ")");
  }
  Chain chain;
  chain.push_back(seed(o));
  for (unsigned l = 1; l <= i; ++l) chain.push_back(refine(chain.back()));
  return chain;
}

GeometricGraph build(unsigned o, unsigned i) { return build_chain(o, i).back(); }

std::vector<Point> coordinates(const GeometricGraph& g) {
  std::vector<Point> out;
  out.reserve(g.points.size());
  for (const auto& p : g.points) out.push_back(p.point);
  return out;
}

VerificationReport verify_halving_all(const GeometricGraph& g) {
  VerificationReport report("every listed segment is halving (level " +
                            std::to_string(g.index) + ", order " + std::to_string(g.order) + ")");
  auto pts = coordinates(g);
  for (const auto& s : g.segments) {
    auto v = oracle::is_halving(std::span<const Point>(pts),
                                IndexTuple{s.plain - g.point_base, s.bold - g.point_base});
    report.check(v.halving, segment_tag(s) + " sides " + std::to_string(v.sides.left) + "/" +
                                std::to_string(v.sides.right) + " on=" +
                                std::to_string(v.sides.on));
  }
  return report;
}

VerificationReport verify_claim_strip_containment(const Chain& chain) {
  require_chain(chain);
  VerificationReport report("descendant extensions stay inside the alpha-strip");
  const unsigned o = chain.front().order;
  for (const auto& level : chain) {
    const Scalar alpha = strip_half_width(o, level.index);
    for (const auto& s : level.segments) {
      Strip strip(geometry(chain, s), alpha);
      auto desc = descendant_segments(chain, s);
      for (std::size_t k = 0; k < desc.size(); ++k) {
        const GeometricGraph& rl = chain[s.level + 1 + k];
        for (auto rid : desc[k]) {
          const SegmentRecord& r = rl.segment(rid);
          Segment ext = extension(geometry(chain, r));
          report.check(in_alpha_strip(strip, ext.a) && in_alpha_strip(strip, ext.b),
                       segment_tag(r) + " leaves the strip of " + segment_tag(s));
        }
      }
    }
  }
  return report;
}

VerificationReport verify_claim_strip_exclusion(const Chain& chain) {
  require_chain(chain);
  VerificationReport report("non-descendant points stay outside the 2 alpha strip");
  const unsigned o = chain.front().order;
  for (const auto& level : chain) {
    const Scalar alpha2 = 2 * strip_half_width(o, level.index);
    for (const auto& s : level.segments) {
      Strip strip(geometry(chain, s), alpha2);
      auto desc = descendant_segments(chain, s);
      for (unsigned j = level.index; j < chain.size(); ++j) {
        const GeometricGraph& pl = chain[j];
        std::set<std::size_t> skip;
        if (j == level.index) {
          skip = {s.plain, s.bold};
        } else {
          for (auto rid : desc[j - level.index - 1]) {
            const SegmentRecord& r = pl.segment(rid);
            skip.insert(r.plain);
            skip.insert(r.bold);
          }
        }
        for (const auto& q : pl.points) {
          if (skip.count(q.id)) continue;
          report.check(!in_alpha_strip(strip, q.point),
                       point_tag(q) + " inside the 2 alpha strip of " + segment_tag(s));
        }
      }
    }
  }
  return report;
}

VerificationReport verify_side_preservation(const Chain& chain) {
  require_chain(chain);
  VerificationReport report("side of a segment's line is inherited by children");
  // Orientation against the segment directed upward: negative means below.
  auto side = [](const Segment& s, const Point& q) {
    return s.a.y() < s.b.y() ? orientation(s.a, s.b, q) : orientation(s.b, s.a, q);
  };
  for (std::size_t l = 0; l + 1 < chain.size(); ++l) {
    const GeometricGraph& cur = chain[l];
    const GeometricGraph& next = chain[l + 1];
    std::vector<std::vector<const TaggedPoint*>> point_children(cur.points.size());
    for (const auto& c : next.points) point_children[*c.parent - cur.point_base].push_back(&c);
    std::vector<std::vector<const SegmentRecord*>> segment_children(cur.segments.size());
    for (const auto& c : next.segments) segment_children[*c.parent - cur.segment_base].push_back(&c);

    for (const auto& s : cur.segments) {
      Segment sg = geometry(chain, s);
      std::vector<Segment> child_geo;
      for (const auto* c : segment_children[s.id - cur.segment_base]) {
        child_geo.push_back(geometry(chain, *c));
      }
      for (const auto& q : cur.points) {
        if (q.id == s.plain || q.id == s.bold) continue;
        const int before = side(sg, q.point);
        for (const auto* qc : point_children[q.id - cur.point_base]) {
          for (std::size_t k = 0; k < child_geo.size(); ++k) {
            report.check(side(child_geo[k], qc->point) == before,
                         point_tag(*qc) + " vs child " +
                             segment_tag(*segment_children[s.id - cur.segment_base][k]) +
                             " disagrees with " + point_tag(q) + " vs " + segment_tag(s));
          }
        }
      }
    }
  }
  return report;
}

VerificationReport verify_slopes(const GeometricGraph& g) {
  VerificationReport report("7/8 <= dx/dy <= 9/8 for non-horizontal pairs");
  const Scalar lo = make_scalar(7, 8), hi = make_scalar(9, 8);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    for (std::size_t j = i + 1; j < g.points.size(); ++j) {
      const Point& a = g.points[i].point;
      const Point& b = g.points[j].point;
      if (a.y() == b.y()) continue;
      Scalar cot = (a.x() - b.x()) / (a.y() - b.y());
      report.check(cot >= lo && cot <= hi, point_tag(g.points[i]) + " and " +
                                               point_tag(g.points[j]) + " cot=" + to_decimal(cot));
    }
  }
  return report;
}

std::pair<Scalar, Scalar> x_gap_range(const std::vector<Point>& points) {
  if (points.size() < 2) throw std::invalid_argument("x gaps need at least two points");
  std::vector<Scalar> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x());
  std::sort(xs.begin(), xs.end());
  Scalar lo = xs[1] - xs[0];
  for (std::size_t k = 2; k < xs.size(); ++k) lo = std::min<Scalar>(lo, xs[k] - xs[k - 1]);
  return {lo, xs.back() - xs.front()};
}

PointSetArtifact finalize_diagonal(const GeometricGraph& g, VerificationReport* report) {
  if (g.order != g.index) throw std::invalid_argument("finalize needs a diagonal graph (o = i)");
  PointSetArtifact art;
  art.dimension = 2;
  art.construction = "recursive";
  art.parameters["order"] = std::to_string(g.order);
  art.parameters["index"] = std::to_string(g.index);
  art.parameters["x_scale"] = "8/9";
  const Scalar scale = make_scalar(8, 9);
  for (const auto& p : g.points) {
    art.points.push_back(point2(p.point.x() * scale, p.point.y()));
    if (p.kind == Kind::bold) art.bold.push_back(p.id - g.point_base);
  }
  for (const auto& s : g.segments) {
    art.claimed_halving.push_back({s.plain - g.point_base, s.bold - g.point_base});
  }
  if (report) {
    *report = VerificationReport("pairwise x-differences within [n^-8, 1]");
    auto [lo, hi] = x_gap_range(art.points);
    const Scalar floor_bound = make_scalar(Integer(1), ipow(Integer(art.size()), 8));
    report->check(lo >= floor_bound, "min dx " + to_decimal(lo) + " below n^-8");
    report->check(hi <= 1, "max dx " + to_decimal(hi) + " above 1");
    report->metrics["min_dx"] = lo.get_str();
    report->metrics["max_dx"] = hi.get_str();
  }
  return art;
}

}  // namespace halving::recursive
