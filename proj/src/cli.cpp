#include "halving/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <stdexcept>

#include "halving/blocks.hpp"
#include "halving/highdim.hpp"
#include "halving/io.hpp"
#include "halving/metrics.hpp"
#include "halving/oracle.hpp"
#include "halving/recursive.hpp"
#include "halving/rosette.hpp"

namespace halving::cli {

namespace {

Scalar parse_rational(const std::string& text) {
  Scalar q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

int finish(const VerificationReport& report, std::ostream& err) {
  err << report.summary() << "\n";
  return report.passed() ? kVerified : kFailed;
}

std::string tuple_text(const IndexTuple& t) {
  std::string s;
  for (auto i : t) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and oracles for point sets with many halving lines"};
  app.require_subcommand(1);

  unsigned order = 1, index = 1;
  std::string out_path, report_path;
  bool verify = false;
  auto* c1 = app.add_subcommand("construct1", "recursive graph at a given order and level");
  c1->add_option("--order", order, "order o")->required();
  c1->add_option("--index", index, "level i <= o")->required();
  c1->add_option("--out", out_path, "output JSON (default stdout)");
  c1->add_flag("--verify", verify, "certify every claimed segment");

  std::string base_path;
  unsigned long blocks = 1;
  unsigned quant_exp = 9;
  long delta_exp = 0;
  std::size_t pad = 0;
  auto* c2 = app.add_subcommand("construct2", "block assembly around a base set");
  c2->add_option("--base", base_path, "base point-set JSON")->required();
  c2->add_option("--blocks", blocks, "block count N")->required();
  c2->add_option("--quant-exp", quant_exp, "quantization exponent Q")->required();
  c2->add_option("--delta-exp", delta_exp, "use delta = 2^-E instead of the default");
  c2->add_option("--pad", pad, "pad to this even size");
  c2->add_option("--out", out_path, "output JSON (default stdout)");
  c2->add_flag("--verify", verify, "certify claims and whole-block balance");

  long epsilon_exp = 0;
  auto* ro = app.add_subcommand("rosette", "rotated copies of a block set");
  ro->add_option("--base", base_path, "block-set JSON")->required();
  ro->add_option("--epsilon-exp", epsilon_exp, "epsilon = 2^-E (0: default)");
  ro->add_option("--pad", pad, "pad with circle points to this even size");
  ro->add_option("--out", out_path, "output JSON (default stdout)");
  ro->add_flag("--verify", verify, "certify transplanted claims");

  std::size_t dim = 3, m = 6, a_blocks = 2, b_blocks = 2;
  std::uint64_t seed = 1;
  auto* hd = app.add_subcommand("highdim", "d-dimensional block assembly with parity fix");
  hd->add_option("--dim", dim, "dimension d >= 3")->required();
  hd->add_option("--m", m, "gadget size m (2, 6, 30)")->required();
  hd->add_option("--seed", seed, "seed for directions and jitter")->required();
  hd->add_option("--a-blocks", a_blocks, "number of A blocks");
  hd->add_option("--b-blocks", b_blocks, "number of B blocks");
  hd->add_option("--epsilon-exp", epsilon_exp, "epsilon = 2^-E (0: default)");
  hd->add_option("--out", out_path, "output JSON (default stdout)");
  hd->add_flag("--verify", verify, "certify retained candidates");

  std::string input, oracle_name = "both";
  auto* ve = app.add_subcommand("verify", "count halving lines or hyperplanes");
  ve->add_option("--input", input, "point-set JSON")->required();
  ve->add_option("--oracle", oracle_name, "naive, sweep or both")
      ->check(CLI::IsMember({"naive", "sweep", "both"}));
  ve->add_option("--report", report_path, "write the report as JSON");

  std::string gamma_text;
  auto* de = app.add_subcommand("density", "max/min distance ratio check");
  de->add_option("--input", input, "point-set JSON")->required();
  de->add_option("--gamma", gamma_text, "gamma as an integer or p/q")->required();

  auto* pl = app.add_subcommand("plot", "SVG rendering");
  pl->add_option("--input", input, "point-set JSON")->required();
  pl->add_option("--out", out_path, "output SVG")->required();

  bool approx = false;
  auto* cs = app.add_subcommand("csv", "CSV export");
  cs->add_option("--input", input, "point-set JSON")->required();
  cs->add_option("--out", out_path, "output CSV (default stdout)");
  cs->add_flag("--approx", approx, "append lossy decimal columns");

  unsigned max_level = 3;
  auto* co = app.add_subcommand("counts", "counting recurrences and their bounds");
  co->add_option("--max", max_level, "largest level")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*c1) {
      auto g = recursive::build(order, index);
      PointSetArtifact art;
      VerificationReport rep("recursive graph");
      if (order == index) {
        art = recursive::finalize_diagonal(g, &rep);
      } else {
        art.points = recursive::coordinates(g);
        art.construction = "recursive";
        art.parameters = {{"order", std::to_string(order)}, {"index", std::to_string(index)}};
        for (const auto& p : g.points) {
          if (p.kind == recursive::Kind::bold) art.bold.push_back(p.id - g.point_base);
        }
        for (const auto& s : g.segments) {
          art.claimed_halving.push_back({s.plain - g.point_base, s.bold - g.point_base});
        }
      }
      emit(out_path, io::to_json(art), out);
      if (verify) rep.merge(oracle::verify_claimed(art));
      return finish(rep, err);
    }
    if (*c2) {
      blocks::BlockParameters p;
      p.base = io::from_json(io::read_file(base_path));
      p.blocks = blocks;
      p.quant_exp = quant_exp;
      if (delta_exp > 0) p.delta = pow2(-delta_exp);
      auto set = blocks::assemble_blocks(p);
      VerificationReport rep = blocks::x_spacing_report(set);
      PointSetArtifact art = set.artifact;
      if (verify) {
        rep.merge(oracle::verify_claimed(art));
        rep.merge(blocks::verify_whole_blocks(set));
      }
      if (pad > 0) {
        VerificationReport pr;
        art = blocks::pad_to_count(art, pad, &pr);
        rep.merge(pr);
      }
      emit(out_path, io::to_json(art), out);
      return finish(rep, err);
    }
    if (*ro) {
      auto base = io::from_json(io::read_file(base_path));
      rosette::RosetteOptions opt;
      if (epsilon_exp > 0) opt.epsilon = pow2(-epsilon_exp);
      VerificationReport rep;
      auto art = rosette::build_rosette(base, opt, verify ? &rep : nullptr);
      if (pad > 0) {
        VerificationReport pr;
        art = rosette::pad_regular_polygon(art, pad, &pr);
        if (verify) rep.merge(pr);
      }
      emit(out_path, io::to_json(art), out);
      return finish(rep, err);
    }
    if (*hd) {
      highdim::AssemblyOptions opt;
      opt.a_blocks = a_blocks;
      opt.b_blocks = b_blocks;
      std::optional<Scalar> eps;
      if (epsilon_exp > 0) eps = pow2(-epsilon_exp);
      auto run = highdim::run_pipeline(dim, m, seed, opt, eps);
      emit(out_path, io::to_json(run.artifact), out);
      VerificationReport rep("highdim candidates");
      rep.metrics["candidates"] = std::to_string(run.candidate_list.size());
      rep.metrics["retained"] = std::to_string(run.fix.retained.size());
      rep.metrics["majority_diff"] = std::to_string(run.fix.majority);
      if (verify) rep.merge(oracle::verify_claimed(run.artifact));
      return finish(rep, err);
    }
    if (*ve) {
      auto art = io::from_json(io::read_file(input));
      VerificationReport rep("oracle verification");
      std::vector<IndexTuple> pairs;
      if (art.dimension == 2) {
        std::optional<oracle::OracleResult> naive, sweep;
        if (oracle_name != "sweep") naive = oracle::count_halving_lines_naive(art.points);
        if (oracle_name != "naive") sweep = oracle::count_halving_lines_sweep(art.points);
        if (naive && sweep) {
          rep.check(naive->halving_pairs == sweep->halving_pairs, "naive and sweep disagree");
        }
        const auto& r = naive ? *naive : *sweep;
        pairs = r.halving_pairs;
        rep.metrics["halving_count"] = std::to_string(r.halving_count);
        rep.metrics["degenerate_incidences"] = std::to_string(r.degenerate_incidences);
      } else {
        auto r = oracle::count_halving_hyperplanes(art.points, art.dimension);
        pairs = r.halving_pairs;
        rep.metrics["halving_count"] = std::to_string(r.halving_count);
        rep.metrics["degenerate_incidences"] = std::to_string(r.degenerate_incidences);
      }
      for (auto t : art.claimed_halving) {
        std::sort(t.begin(), t.end());
        rep.check(std::binary_search(pairs.begin(), pairs.end(), t),
                  "claimed tuple (" + tuple_text(t) + ") is not halving");
      }
      out << "halving_count " << rep.metrics["halving_count"] << "\n";
      if (!report_path.empty()) io::write_file(report_path, io::report_json(rep));
      return finish(rep, err);
    }
    if (*de) {
      auto art = io::from_json(io::read_file(input));
      auto rep = rosette::density_check(art.points, parse_rational(gamma_text), art.dimension);
      out << io::report_json(rep);
      return finish(rep, err);
    }
    if (*pl) {
      auto art = io::from_json(io::read_file(input));
      io::write_file(out_path, io::to_svg(art));
      return kVerified;
    }
    if (*cs) {
      auto art = io::from_json(io::read_file(input));
      emit(out_path, io::to_csv(art, approx), out);
      return kVerified;
    }
    if (*co) {
      auto table = metrics::counts(max_level);
      out << "i a n m\n";
      for (const auto& r : table) {
        out << r.index << " " << r.a.get_str() << " " << r.n.get_str() << " " << r.m.get_str()
            << "\n";
      }
      return finish(metrics::check_bounds(table), err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace halving::cli
