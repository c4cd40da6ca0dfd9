#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halving/highdim.hpp"
#include "halving/recursive.hpp"
#include "ref_oracle.hpp"

using namespace halving;
namespace hd = halving::highdim;

TEST_CASE("default epsilon and important bases") {
  CHECK(hd::default_epsilon(6) == make_scalar(1, 32));
  CHECK(hd::default_epsilon(2) == make_scalar(1, 8));
  CHECK(hd::default_epsilon(30) == make_scalar(1, 128));
  CHECK(hd::important_base(6).size() == 6);
  CHECK(hd::important_base(30).size() == 30);
  CHECK_THROWS_AS(hd::important_base(8), std::invalid_argument);
}

TEST_CASE("normalized important part") {
  auto base = hd::important_base(6);
  Scalar eps = make_scalar(1, 32), f;
  auto pts = hd::normalize_important(base.points, eps, &f);
  Scalar lo = 5, hi = -5;
  for (const auto& p : pts) {
    lo = std::min<Scalar>(lo, p.x());
    hi = std::max<Scalar>(hi, p.x());
    CHECK(abs(p.y()) < eps * eps * eps);
  }
  CHECK(lo == 1);
  CHECK(hi == 2);
  // an affine map keeps the halving pairs
  CHECK(ref::failing_claims(pts, base.claimed_halving) == 0);
}

TEST_CASE("gadget layouts") {
  Scalar eps = make_scalar(1, 32);
  auto base = hd::important_base(6);
  auto a = hd::block_A(hd::normalize_important(base.points, eps), base.claimed_halving, eps);
  REQUIRE(a.points.size() == 12);
  CHECK(a.important_count == 6);
  CHECK(a.points[6] == point2(-2 + make_scalar(1, 6), eps * eps));
  CHECK(a.points[11] == point2(make_scalar(-3, 2) + make_scalar(3, 6), -eps * eps));
  CHECK(hd::verify_block_A(a).passed());
  CHECK(ref::failing_claims(a.points, a.claims) == 0);

  auto lit = hd::block_B(6, eps, hd::BVariant::literal);
  auto sym = hd::block_B(6, eps, hd::BVariant::symmetric);
  CHECK(lit.points[0] == point2(-2 + make_scalar(1, 6), eps));
  CHECK(lit.points[6] == point2(1 + make_scalar(1, 6), -eps));
  CHECK(sym.points[6] == point2(1, -eps));
  // symmetric variant is centrally symmetric
  for (std::size_t i = 0; i < 6; ++i) CHECK(sym.points[6 + i] == point2(-sym.points[5 - i].x(), -sym.points[5 - i].y()));
  CHECK_THROWS_AS(hd::block_A(base.points, base.claimed_halving, eps), std::domain_error);
}

TEST_CASE("sphere directions") {
  auto set = hd::sphere_directions(6, 3, 1);
  CHECK(set.centers.size() >= 4);
  const Scalar cap = 1 - set.min_separation / 2;
  for (std::size_t i = 0; i < set.centers.size(); ++i) {
    const auto& c = set.centers[i];
    CHECK(dot(c.coords, c.coords) == 1);
    CHECK_FALSE((c[0] == 0 && c[1] == 0));
    for (std::size_t j = i + 1; j < set.centers.size(); ++j)
      CHECK(abs(dot(c.coords, set.centers[j].coords)) <= cap);
  }
  CHECK(set.with_antipodes().size() == 2 * set.centers.size());
  auto again = hd::sphere_directions(6, 3, 1);
  CHECK(again.centers == set.centers);
  auto four = hd::sphere_directions(2, 4, 3, 12);
  CHECK(four.centers.size() <= 12);
  for (const auto& c : four.centers) CHECK(dot(c.coords, c.coords) == 1);
}

TEST_CASE("diff of a hyperplane") {
  std::vector<Point> pts{Point{Scalar(0), Scalar(0), Scalar(0)}, Point{Scalar(1), Scalar(0), Scalar(0)},
                         Point{Scalar(0), Scalar(1), Scalar(0)}, Point{Scalar(0), Scalar(0), Scalar(1)},
                         Point{Scalar(3), Scalar(1), Scalar(2)}, Point{Scalar(1), Scalar(1), Scalar(-1)}};
  auto r = hd::diff_of_hyperplane(pts, IndexTuple{0, 1, 2});
  CHECK(r.above == 2);
  CHECK(r.below == 1);
  CHECK(r.diff() == 1);
  // vertical plane x = 0
  CHECK_THROWS(hd::diff_of_hyperplane(pts, IndexTuple{0, 2, 3}));
}

TEST_CASE("three-dimensional pipeline") {
  auto run = hd::run_pipeline(3, 6, 1);
  const auto& as = run.assembly;
  CHECK(as.points.size() == 48);
  CHECK(run.candidate_list.size() == 240);
  CHECK(hd::expected_candidate_count(as) == 240);
  for (long v : run.diffs) {
    CHECK(std::labs(v) <= 2);
    CHECK((v - 3) % 2 == 0);
  }
  // reference diff from integer determinants for a sample of candidates
  auto z = ref::integerize(as.points);
  for (std::size_t k = 0; k < run.candidate_list.size(); k += 17) {
    const auto& t = run.candidate_list[k];
    std::vector<ref::Row> def;
    for (auto i : t) def.push_back(z[i]);
    long above = 0, below = 0;
    ref::Row up = def[0];
    up[2] += 1;
    int up_side = ref::side(def, up);
    REQUIRE(up_side != 0);
    for (std::size_t q = 0; q < z.size(); ++q) {
      if (std::find(t.begin(), t.end(), q) != t.end()) continue;
      int s = ref::side(def, z[q]);
      (s == up_side ? above : below)++;
    }
    CHECK(run.diffs[k] == above - below);
  }
  CHECK(run.fix.majority <= 0);
  CHECK(run.artifact.size() == 48 + static_cast<std::size_t>(-run.fix.majority));
  CHECK((run.artifact.size() + 3) % 2 == 0);
  CHECK_FALSE(run.fix.retained.empty());
  CHECK(ref::failing_claims(run.artifact.points, run.artifact.claimed_halving) == 0);
  CHECK(run.artifact.parameters.at("seed") == "1");
}

TEST_CASE("pipeline is seed-deterministic") {
  auto a = hd::run_pipeline(3, 6, 4);
  auto b = hd::run_pipeline(3, 6, 4);
  CHECK(a.artifact.points == b.artifact.points);
  CHECK(a.fix.retained == b.fix.retained);
}

TEST_CASE("assembly argument checks") {
  Scalar eps = make_scalar(1, 32);
  auto base = hd::important_base(6);
  auto a = hd::block_A(hd::normalize_important(base.points, eps), base.claimed_halving, eps);
  auto dirs = hd::sphere_directions(6, 3, 1);
  hd::AssemblyOptions opt;
  opt.b_blocks = 0;
  CHECK_THROWS_AS(hd::assemble(3, 6, eps, dirs.centers, a, opt), std::invalid_argument);
  CHECK_THROWS_AS(hd::assemble(3, 30, eps, dirs.centers, a), std::invalid_argument);
}
