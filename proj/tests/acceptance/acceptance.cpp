// One line per criterion: "PASS c<k> ..." or "FAIL c<k> ...".
// Usage: acceptance [c1 ... c10]   (no arguments: all of them)

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "halving/blocks.hpp"
#include "halving/highdim.hpp"
#include "halving/io.hpp"
#include "halving/metrics.hpp"
#include "halving/oracle.hpp"
#include "halving/recursive.hpp"
#include "halving/rosette.hpp"

using namespace halving;
namespace rc = halving::recursive;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

PointSetArtifact base6() { return rc::finalize_diagonal(rc::build(1, 1)); }

std::vector<IndexTuple> sorted_claims(const PointSetArtifact& a) {
  std::vector<IndexTuple> out;
  for (auto t : a.claimed_halving) {
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool all_in(const std::vector<IndexTuple>& claims, const std::vector<IndexTuple>& pairs) {
  return std::all_of(claims.begin(), claims.end(), [&](const IndexTuple& t) {
    return std::binary_search(pairs.begin(), pairs.end(), t);
  });
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void c1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto table = metrics::counts(8);
  auto rep = metrics::check_bounds(table);
  o.require(rep.passed(), "bound chains: " + rep.summary());
  const std::pair<unsigned, unsigned> want[] = {{6, 5}, {30, 45}, {290, 765}};
  for (unsigned i = 1; i <= 3; ++i) {
    auto g = rc::build(i, i);
    o.require(g.points.size() == want[i - 1].first && g.segments.size() == want[i - 1].second,
              "build(" + std::to_string(i) + "," + std::to_string(i) + ") sizes");
    o.require(table[i].n == want[i - 1].first && table[i].m == want[i - 1].second, "table row " + std::to_string(i));
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "runtime " + std::to_string(s) + " s");
  o.detail << (o.ok ? "" : "; ") << "rows 0..8 checked, " << s << " s";
}

void c2(Outcome& o) {
  for (unsigned i = 1; i <= 3; ++i) {
    auto g = rc::build(i, i);
    auto pts = rc::coordinates(g);
    auto t0 = std::chrono::steady_clock::now();
    auto naive = oracle::count_halving_lines_naive(pts);
    double tn = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto sweep = oracle::count_halving_lines_sweep(pts);
    double ts = seconds_since(t0);
    o.require(naive.halving_pairs == sweep.halving_pairs, "oracles disagree at i=" + std::to_string(i));
    std::vector<IndexTuple> claims;
    for (const auto& s : g.segments) {
      IndexTuple t{s.plain - g.point_base, s.bold - g.point_base};
      std::sort(t.begin(), t.end());
      claims.push_back(t);
    }
    std::sort(claims.begin(), claims.end());
    o.require(all_in(claims, naive.halving_pairs), "naive misses a segment at i=" + std::to_string(i));
    o.require(all_in(claims, sweep.halving_pairs), "sweep misses a segment at i=" + std::to_string(i));
    o.detail << (o.ok ? "" : "; ") << "i=" << i << ": " << claims.size() << " segments, total "
             << naive.halving_count << "/" << sweep.halving_count << " (naive " << tn << " s, sweep " << ts
             << " s) ";
  }
}

void c3(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (unsigned i = 1; i <= 3; ++i) {
    auto chain = rc::build_chain(3, i);
    for (const auto& rep : {rc::verify_claim_strip_containment(chain), rc::verify_claim_strip_exclusion(chain),
                            rc::verify_side_preservation(chain), rc::verify_slopes(chain.back())}) {
      o.require(rep.passed(), rep.summary());
      checked += rep.checked;
    }
  }
  double s = seconds_since(t0);
  o.require(s < 300, "runtime " + std::to_string(s) + " s");
  o.detail << (o.ok ? "" : "; ") << checked << " checks, " << s << " s";
}

void c4(Outcome& o) {
  for (unsigned i = 1; i <= 3; ++i) {
    VerificationReport rep;
    auto art = rc::finalize_diagonal(rc::build(i, i), &rep);
    o.require(rep.passed(), rep.summary());
    const Scalar lo = make_scalar(Integer(1), ipow(Integer(art.size()), 8));
    std::vector<Scalar> xs;
    for (const auto& p : art.points) xs.push_back(p.x());
    std::sort(xs.begin(), xs.end());
    bool ok = xs.back() - xs.front() <= 1;
    for (std::size_t k = 1; k < xs.size(); ++k) ok = ok && xs[k] - xs[k - 1] >= lo;
    o.require(ok, "dx outside [n^-8, 1] at i=" + std::to_string(i));
    o.detail << (o.ok ? "" : "; ") << "i=" << i << " n=" << art.size() << " ";
  }
}

void c5(Outcome& o) {
  auto g = rc::build(2, 2);
  const Scalar mag = make_scalar(Integer(1), ipow(Integer(30), 9));
  auto rep = blocks::verify_perturbation_tolerance(g, mag, 10, 2024);
  o.require(rep.passed(), rep.summary());
  o.require(rep.checked == 10 * 45, "expected 450 segment checks, got " + std::to_string(rep.checked));
  o.detail << (o.ok ? "" : "; ") << "10 trials x 45 segments";
}

void c6(Outcome& o) {
  for (unsigned long N = 1; N <= 3; ++N) {
    blocks::BlockParameters p;
    p.base = base6();
    p.blocks = N;
    p.quant_exp = 9;
    auto set = blocks::assemble_blocks(p);
    const auto& art = set.artifact;
    auto sweep = oracle::count_halving_lines_sweep(art.points);
    auto claims = sorted_claims(art);
    o.require(claims.size() == (2 * N + 1) * 5, "claim count at N=" + std::to_string(N));
    o.require(all_in(claims, sweep.halving_pairs), "uncertified claim at N=" + std::to_string(N));
    auto whole = blocks::verify_whole_blocks(set);
    o.require(whole.passed(), whole.summary());
    auto sp = blocks::x_spacing_report(set);
    Scalar lo = -1;
    for (std::size_t a = 0; a < art.size(); ++a)
      for (std::size_t b = a + 1; b < art.size(); ++b) {
        Scalar d = abs(art.points[a].x() - art.points[b].x());
        if (lo < 0 || d < lo) lo = d;
      }
    o.require(sp.metrics.at("min_dx") == lo.get_str(), "reported min dx differs from the scan");
    o.detail << (o.ok ? "" : "; ") << "N=" << N << ": " << claims.size() << " lines, min dx "
             << to_decimal(lo, 6) << " ";
  }
}

void c7(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  blocks::BlockParameters p;
  p.base = base6();
  p.blocks = 1;
  auto set = blocks::assemble_blocks(p);
  auto base = blocks::pad_to_count(set.artifact, 18);
  const std::size_t n = base.size();
  VerificationReport rep;
  auto ros = rosette::build_rosette(base, {}, &rep);
  o.require(rep.passed(), rep.summary());
  o.require(ros.size() == n * (n + 1), "point count " + std::to_string(ros.size()));
  auto sweep = oracle::count_halving_lines_sweep(ros.points);
  auto claims = sorted_claims(ros);
  o.require(all_in(claims, sweep.halving_pairs), "uncertified transplanted line");
  const std::size_t floor_count = (n + 1) * base.claimed_halving.size();
  o.require(claims.size() >= floor_count, "transplanted family too small");
  auto dens = rosette::density_check(ros.points, Scalar(4), 2);
  o.require(dens.passed(), "density at gamma=4: ratio " + dens.metrics["ratio"] + " > bound " + dens.metrics["bound"]);
  o.detail << (o.ok ? "" : "; ") << ros.size() << " points, " << sweep.halving_count << " halving lines ("
           << claims.size() << " transplanted), " << seconds_since(t0) << " s";
}

void c8(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  highdim::AssemblyOptions opt;
  opt.a_blocks = 2;
  opt.b_blocks = 2;
  auto run = highdim::run_pipeline(3, 6, 1, opt);
  std::map<long, std::size_t> hist;
  for (long v : run.diffs) {
    ++hist[v];
    o.require(std::labs(v) <= 2, "|diff| > 2");
    o.require((v - 3) % 2 == 0, "diff parity");
  }
  o.require(run.candidate_list.size() == highdim::expected_candidate_count(run.assembly),
            "candidate count");
  auto hyper = oracle::count_halving_hyperplanes(run.artifact.points, 3);
  auto claims = sorted_claims(run.artifact);
  o.require(!claims.empty(), "no retained candidates");
  o.require(all_in(claims, hyper.halving_pairs), "retained candidate not halving");
  o.require((run.artifact.size() + 3) % 2 == 0, "n + d odd");
  double s = seconds_since(t0);
  o.require(s < 120, "runtime");
  o.detail << (o.ok ? "" : "; ") << run.artifact.size() << " points, " << run.candidate_list.size()
           << " candidates, diffs";
  for (auto [v, c] : hist) o.detail << " " << v << ":" << c;
  o.detail << ", " << claims.size() << " retained, " << s << " s";
}

void c9(Outcome& o) {
  std::vector<Point> sq{point2(0, 0), point2(1, 0), point2(1, 1), point2(0, 1)};
  o.require(oracle::count_halving_lines_naive(sq).halving_count == 2, "square naive");
  o.require(oracle::count_halving_lines_sweep(sq).halving_count == 2, "square sweep");
  std::vector<Point> hex{point2(0, 0), point2(2, 0), point2(3, 1), point2(2, 2), point2(0, 2), point2(-1, 1)};
  o.require(oracle::count_halving_lines_naive(hex).halving_count == 3, "hexagon naive");
  o.require(oracle::count_halving_lines_sweep(hex).halving_count == 3, "hexagon sweep");
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<long> u(-50, 50);
  std::uniform_int_distribution<int> size(1, 20);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 * static_cast<std::size_t>(size(rng));
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p = point2(Scalar(u(rng)), Scalar(u(rng)));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto a = oracle::count_halving_lines_naive(pts);
    auto b = oracle::count_halving_lines_sweep(pts);
    o.require(a.halving_pairs == b.halving_pairs, "random set " + std::to_string(t));
  }
  o.detail << (o.ok ? "" : "; ") << "square 2, hexagon 3, 50 random sets agree";
}

void c10(Outcome& o) {
  std::vector<PointSetArtifact> arts;
  for (unsigned i = 1; i <= 3; ++i) arts.push_back(rc::finalize_diagonal(rc::build(i, i)));
  for (unsigned long N = 1; N <= 3; ++N) {
    blocks::BlockParameters p;
    p.base = base6();
    p.blocks = N;
    arts.push_back(blocks::assemble_blocks(p).artifact);
  }
  arts.push_back(rosette::build_rosette(arts[3]));
  arts.push_back(highdim::run_pipeline(3, 6, 1).artifact);
  for (const auto& a : arts) {
    auto text = io::to_json(a);
    auto back = io::from_json(text);
    o.require(back.points == a.points && back.claimed_halving == a.claimed_halving && io::to_json(back) == text,
              "round trip of " + a.construction);
    if (a.dimension <= 3) o.require(io::to_svg(a) == io::to_svg(back), "svg determinism of " + a.construction);
  }
  o.detail << (o.ok ? "" : "; ") << arts.size() << " artifacts";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<void(Outcome&)>>>> all{
      {"c1", {"recursion counts and bounds", c1}},
      {"c2", {"segments certified by naive and sweep", c2}},
      {"c3", {"strip, side and slope claims at order 3", c3}},
      {"c4", {"finalized x-spacing in [n^-8, 1]", c4}},
      {"c5", {"horizontal perturbation robustness", c5}},
      {"c6", {"block assembly lines", c6}},
      {"c7", {"rosette lines and density", c7}},
      {"c8", {"three-dimensional desk instance", c8}},
      {"c9", {"oracle baselines", c9}},
      {"c10", {"serialization round trip and svg determinism", c10}},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [key, entry] : all) {
    if (!wanted.empty() && !wanted.count(key)) continue;
    Outcome o;
    try {
      entry.second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << key << " " << entry.first << ": " << o.detail.str() << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
