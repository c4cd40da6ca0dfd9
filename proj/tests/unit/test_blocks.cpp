#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halving/blocks.hpp"
#include "halving/recursive.hpp"
#include "ref_oracle.hpp"

using namespace halving;
namespace bl = halving::blocks;

namespace {

PointSetArtifact base6() { return recursive::finalize_diagonal(recursive::build(1, 1)); }

Scalar min_dx_scan(const std::vector<Point>& pts) {
  std::optional<Scalar> lo;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Scalar d = abs(pts[a].x() - pts[b].x());
      if (d > 0 && (!lo || d < *lo)) lo = d;
    }
  return *lo;
}

}  // namespace

TEST_CASE("quantized coordinates") {
  // floor(36 * 1/5) / 36 + 2 / 216
  CHECK(bl::quantized_coordinate(make_scalar(1, 5), 2, 6, 2) == make_scalar(7, 36) + make_scalar(2, 216));
  CHECK(bl::quantized_coordinate(make_scalar(-1, 5), 1, 6, 2) == make_scalar(-8, 36) + make_scalar(1, 216));
}

TEST_CASE("quantize keeps order-free offsets and shifts into [1, 3]") {
  std::vector<Point> pts{point2(make_scalar(1, 7), 0), point2(make_scalar(2, 7), 1)};
  auto q = bl::quantize(pts, 2, 3);
  CHECK(q[0].x() >= 1);
  CHECK(q[1].x() <= 3);
  CHECK(q[1].x() - q[0].x() ==
        bl::quantized_coordinate(pts[1].x(), 2, 2, 3) - bl::quantized_coordinate(pts[0].x(), 1, 2, 3));
  CHECK(q[0].y() == 0);
  CHECK_THROWS_AS(bl::quantize(pts, 2, 3, make_scalar(1, 1000000)), std::domain_error);
  CHECK_THROWS_AS(bl::quantize(pts, 3, 3), std::invalid_argument);
}

TEST_CASE("flatten") {
  auto f = bl::flatten({point2(2, 3)}, make_scalar(1, 4));
  CHECK(f[0] == point2(2, make_scalar(3, 16)));
  CHECK_THROWS(bl::flatten({point2(2, 3)}, Scalar(0)));
}

TEST_CASE("default delta respects its caps") {
  for (unsigned long N = 1; N <= 4; ++N) {
    Scalar d = bl::default_delta(N, 6, 9);
    CHECK(d <= make_scalar(Integer(1), Integer(64 * N * 6)));
    Scalar k = Scalar(Integer(N + 1));
    Scalar budget = make_scalar(Integer(1), ipow(Integer(6), 10) * 4);
    CHECK(8 * k * k * d * d + 2 * k * d * d * d < budget);
    // largest power of two with that property
    Scalar d2 = d * 2;
    CHECK((d2 > make_scalar(Integer(1), Integer(64 * N * 6)) ||
           8 * k * k * d2 * d2 + 2 * k * d2 * d2 * d2 >= budget));
  }
}

TEST_CASE("perturbation tolerance") {
  auto g = recursive::build(1, 1);
  auto rep = bl::verify_perturbation_tolerance(g, make_scalar(Integer(1), ipow(Integer(6), 9)), 5, 3);
  CHECK(rep.passed());
  CHECK_THROWS_AS(bl::verify_perturbation_tolerance(g, make_scalar(1, 10), 1, 1), std::invalid_argument);
}

TEST_CASE("assembled blocks") {
  for (unsigned long N = 1; N <= 2; ++N) {
    bl::BlockParameters p;
    p.base = base6();
    p.blocks = N;
    auto set = bl::assemble_blocks(p);
    CHECK(set.positive.size() == N + 1);
    CHECK(set.negative.size() == N);
    CHECK(set.artifact.size() == (2 * N + 1) * 6);
    CHECK(set.artifact.claimed_halving.size() == (2 * N + 1) * 5);
    CHECK(ref::failing_claims(set.artifact.points, set.artifact.claimed_halving) == 0);
    CHECK(bl::verify_whole_blocks(set).passed());
    auto sp = bl::x_spacing_report(set);
    CHECK(sp.metrics.at("min_dx") == min_dx_scan(set.artifact.points).get_str());
    CHECK(sp.passed());
    // block 0 on each side: same quantized copy, rotated
    const Point& a = set.positive[0][0];
    const Point& b = set.negative[0][0];
    CHECK(squared_distance(a, point2(0, 0)) == squared_distance(b, point2(0, 0)));
  }
}

TEST_CASE("a too coarse delta breaks whole-block balance") {
  bl::BlockParameters p;
  p.base = base6();
  p.blocks = 2;
  p.delta = make_scalar(1, 2);
  auto set = bl::assemble_blocks(p);
  CHECK_FALSE(bl::verify_whole_blocks(set).passed());
}

TEST_CASE("padding") {
  bl::BlockParameters p;
  p.base = base6();
  p.blocks = 1;
  auto set = bl::assemble_blocks(p);
  VerificationReport rep;
  auto padded = bl::pad_to_count(set.artifact, 22, &rep);
  CHECK(padded.size() == 22);
  CHECK(rep.passed());
  CHECK(ref::failing_claims(padded.points, padded.claimed_halving) == 0);
  CHECK_THROWS_AS(bl::pad_to_count(set.artifact, 21), std::invalid_argument);
  CHECK_THROWS_AS(bl::pad_to_count(set.artifact, 10), std::invalid_argument);
}
