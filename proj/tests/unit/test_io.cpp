#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <regex>

#include "halving/io.hpp"
#include "halving/recursive.hpp"

using namespace halving;

namespace {

PointSetArtifact tiny() {
  PointSetArtifact a;
  a.points = {point2(make_scalar(1, 3), pow2(-200)), point2(make_scalar(-7, 2), Scalar(5))};
  a.construction = "manual";
  a.parameters = {{"seed", "9"}};
  a.claimed_halving = {{0, 1}};
  a.bold = {1};
  return a;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("json round trip is exact") {
  auto a = tiny();
  auto text = io::to_json(a);
  auto b = io::from_json(text);
  CHECK(b.points == a.points);
  CHECK(b.claimed_halving == a.claimed_halving);
  CHECK(b.bold == a.bold);
  CHECK(b.parameters == a.parameters);
  CHECK(b.construction == "manual");
  CHECK(io::to_json(b) == text);
  auto doc = nlohmann::json::parse(text);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["count"] == 2);
  CHECK(doc["coordinates"][0][1][1] == pow2(200).get_num().get_str());
}

TEST_CASE("json rejects malformed documents") {
  auto good = nlohmann::json::parse(io::to_json(tiny()));
  auto bad = [&](auto mutate) {
    auto d = good;
    mutate(d);
    return d.dump();
  };
  CHECK_THROWS_AS(io::from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["schema_version"] = 2; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["count"] = 3; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["coordinates"][0][0][1] = "0"; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["coordinates"][0][0][1] = "-3"; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["coordinates"][0][0][0] = 1.5; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["coordinates"][1].erase(1); })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["claimed_halving"][0][1] = 7; })), std::invalid_argument);
  CHECK_THROWS_AS(io::from_json(bad([](auto& d) { d["coordinates"][0][0][0] = "1e3"; })), std::invalid_argument);
}

TEST_CASE("non-canonical input fractions are reduced") {
  auto d = nlohmann::json::parse(io::to_json(tiny()));
  d["coordinates"][1][1] = {"10", "2"};
  auto a = io::from_json(d.dump());
  CHECK(a.points[1].y() == 5);
}

TEST_CASE("csv") {
  auto csv = io::to_csv(tiny());
  CHECK(csv.rfind("idx,x_num,x_den,y_num,y_den\n", 0) == 0);
  CHECK(csv.find("\n1,-7,2,5,1\n") != std::string::npos);
  auto approx = io::to_csv(tiny(), true);
  CHECK(approx.rfind("idx,x_num,x_den,y_num,y_den,x_approx,y_approx\n", 0) == 0);
  CHECK(approx.find(",-3.5,5\n") != std::string::npos);
}

TEST_CASE("svg of the smallest graph") {
  auto art = recursive::finalize_diagonal(recursive::build(1, 1));
  auto svg = io::to_svg(art);
  CHECK(count(svg, "<circle") == 6);
  CHECK(count(svg, "r=\"4\" fill=\"black\"") == 1);
  CHECK(count(svg, "r=\"4\" fill=\"white\"") == 5);
  CHECK(count(svg, "<line") == 5);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(io::to_svg(art) == svg);
  // pure reader
  auto before = io::to_json(art);
  (void)io::to_svg(art);
  CHECK(io::to_json(art) == before);
}

TEST_CASE("svg of two points") {
  PointSetArtifact a;
  a.points = {point2(0, 0), point2(1, 1)};
  CHECK(count(io::to_svg(a), "<circle") == 2);
  CHECK(count(io::to_svg(a), "<line") == 0);
  a.claimed_halving = {{0, 1}};
  CHECK(count(io::to_svg(a), "<line") == 1);
  PointSetArtifact four;
  four.dimension = 4;
  four.points = {Point{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
  CHECK_THROWS_AS(io::to_svg(four), std::invalid_argument);
}

TEST_CASE("report json") {
  VerificationReport r("demo");
  r.check(false, "bad thing");
  auto doc = nlohmann::json::parse(io::report_json(r));
  CHECK(doc["passed"] == false);
  CHECK(doc["violations"] == 1);
  CHECK(doc["witnesses"][0] == "bad thing");
}
