#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halving/blocks.hpp"
#include "halving/highdim.hpp"
#include "halving/io.hpp"
#include "halving/metrics.hpp"
#include "halving/oracle.hpp"
#include "halving/recursive.hpp"
#include "halving/rosette.hpp"

namespace py = pybind11;
using namespace halving;

namespace {

// Documents cross the boundary as JSON text; the Python side turns
// coordinates into fractions.Fraction.
std::string construct1(unsigned order, unsigned index) {
  auto g = recursive::build(order, index);
  if (order == index) return io::to_json(recursive::finalize_diagonal(g));
  PointSetArtifact art;
  art.points = recursive::coordinates(g);
  art.construction = "recursive";
  art.parameters = {{"order", std::to_string(order)}, {"index", std::to_string(index)}};
  for (const auto& s : g.segments) art.claimed_halving.push_back({s.plain - g.point_base, s.bold - g.point_base});
  return io::to_json(art);
}

std::string construct2(const std::string& base, unsigned long blocks, unsigned quant_exp) {
  blocks::BlockParameters p;
  p.base = io::from_json(base);
  p.blocks = blocks;
  p.quant_exp = quant_exp;
  return io::to_json(blocks::assemble_blocks(p).artifact);
}

std::string make_rosette(const std::string& base) {
  return io::to_json(rosette::build_rosette(io::from_json(base)));
}

std::string make_highdim(std::size_t dim, std::size_t m, std::uint64_t seed) {
  return io::to_json(highdim::run_pipeline(dim, m, seed).artifact);
}

py::tuple count_halving(const std::string& doc, const std::string& which) {
  auto art = io::from_json(doc);
  oracle::OracleResult r;
  py::gil_scoped_release unlocked;
  if (art.dimension > 2) {
    r = oracle::count_halving_hyperplanes(art.points, art.dimension);
  } else if (which == "naive") {
    r = oracle::count_halving_lines_naive(art.points);
  } else if (which == "sweep") {
    r = oracle::count_halving_lines_sweep(art.points);
  } else {
    throw std::invalid_argument("oracle must be naive or sweep");
  }
  py::gil_scoped_acquire locked;
  return py::make_tuple(r.halving_count, r.halving_pairs);
}

std::string verify_claims(const std::string& doc) {
  return io::report_json(oracle::verify_claimed(io::from_json(doc)));
}

std::string density(const std::string& doc, const std::string& gamma) {
  Scalar g;
  if (g.set_str(gamma, 10) != 0 || g.get_den() == 0) throw std::invalid_argument("bad gamma");
  g.canonicalize();
  auto art = io::from_json(doc);
  return io::report_json(rosette::density_check(art.points, g, art.dimension));
}

std::vector<std::tuple<std::string, std::string, std::string>> counts(unsigned i_max) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& r : metrics::counts(i_max)) out.emplace_back(r.a.get_str(), r.n.get_str(), r.m.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact halving-line constructions and oracles";
  m.attr("SCHEMA_VERSION") = io::kSchemaVersion;
  m.def("construct1", &construct1, py::arg("order"), py::arg("index"));
  m.def("construct2", &construct2, py::arg("base"), py::arg("blocks"), py::arg("quant_exp") = 9);
  m.def("rosette", &make_rosette, py::arg("base"));
  m.def("highdim", &make_highdim, py::arg("dim"), py::arg("m"), py::arg("seed"));
  m.def("count_halving", &count_halving, py::arg("doc"), py::arg("oracle") = "sweep");
  m.def("verify_claims", &verify_claims, py::arg("doc"), py::call_guard<py::gil_scoped_release>());
  m.def("density", &density, py::arg("doc"), py::arg("gamma"));
  m.def("counts", &counts, py::arg("i_max"));
  m.def("to_svg", [](const std::string& doc) { return io::to_svg(io::from_json(doc)); }, py::arg("doc"));
  m.def("to_csv", [](const std::string& doc, bool approx) { return io::to_csv(io::from_json(doc), approx); },
        py::arg("doc"), py::arg("approx") = false);
}
