// artemis: colour graphs with no odd hole, no antihole and no prism.
//
//   artemis color [--verify] [--trace-json PATH] [--report] FILE
//   artemis detect FILE
//   artemis generate --family F --n N --density D --seed S
//   artemis bench --family F --sizes 50,100,200 --seed S [--density D]
//
// Exit codes: 0 success, 1 input is not colourable as an Artemis graph (or a
// verification check failed), 2 parse error, 3 oracle budget refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "artemis/bench.hpp"
#include "artemis/engine.hpp"
#include "artemis/error.hpp"
#include "artemis/generate.hpp"
#include "artemis/io.hpp"
#include "artemis/oracles.hpp"
#include "artemis/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotArtemis = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

artemis::io::DimacsGraph load(const std::string& path) {
  auto parsed = artemis::io::parse_dimacs(read_input(path));
  if (parsed.duplicate_edges > 0)
    std::cerr << "warning: " << parsed.duplicate_edges << " duplicate edge(s) ignored\n";
  if (parsed.edge_count_mismatch)
    std::cerr << "warning: header declares " << parsed.declared_edges << " edges, found " << parsed.graph.m() << '\n';
  return parsed;
}

int run_color(const std::string& file, bool verify, const std::string& trace_path, bool report) {
  using namespace artemis;
  const Graph g = load(file).graph;
  const oracles::OracleBudget budget;
  verify::Verifier verifier(budget);
  EngineOptions opts;
  OpCounters counters;
  opts.counters = &counters;
  if (verify && g.n() <= budget.max_n) opts.observer = &verifier;

  const auto t0 = std::chrono::steady_clock::now();
  const ArtemisColoring result = color_artemis(g, opts);
  const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::cout << io::write_coloring(result.coloring);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + trace_path);
    out << io::trace_json(result);
  }

  bool verified = true;
  nlohmann::json checks = nlohmann::json::object();
  if (verify) {
    if (g.n() <= budget.max_n) {
      verifier.check_result(g, result);
      for (const auto& [name, t] : verifier.tallies())
        checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
      for (const auto& f : verifier.failures()) std::cerr << "verify: FAIL " << f << '\n';
      verified = verifier.ok();
      std::cerr << "verify: oracle checks " << (verified ? "passed" : "FAILED") << '\n';
    } else {
      const bool proper = is_proper(g, result.coloring);
      const int clique = verify::greedy_clique_size(g);
      std::cerr << "verify: n=" << g.n() << " exceeds the oracle budget (" << budget.max_n
                << "); checking properness and the greedy clique bound only\n";
      std::cerr << "verify: proper=" << (proper ? "yes" : "NO") << " colours=" << result.coloring.num_colors
                << " greedy-clique=" << clique
                << (clique == result.coloring.num_colors ? " (optimal)" : " (optimality not certified)") << '\n';
      checks["proper-coloring"] = proper;
      checks["greedy-clique"] = clique;
      verified = proper;
    }
  }
  if (report) {
    nlohmann::json r = {
        {"input", file},
        {"n", g.n()},
        {"m", g.m()},
        {"num_colors", result.coloring.num_colors},
        {"contractions", result.trace.steps.size()},
        {"ops",
         {{"interesting", counters.interesting},
          {"outer_path", counters.outer_path},
          {"even_pair", counters.even_pair},
          {"chain", counters.chain},
          {"contraction", counters.contraction},
          {"total", counters.total()}}},
        {"wall_ms", wall_ms},
    };
    if (verify) r["verification"] = checks;
    std::cerr << r.dump(2) << '\n';
  }
  return verified ? kExitOk : kExitNotArtemis;
}

int run_detect(const std::string& file) {
  using namespace artemis;
  const Graph g = load(file).graph;
  const oracles::OracleBudget budget;
  bool clean = true;
  auto show = [&](const char* label, const oracles::StructureWitness& w) {
    std::cout << label << ':';
    if (!w) {
      std::cout << " none\n";
      return;
    }
    clean = false;
    for (int v : w.vertices) std::cout << ' ' << v + 1;
    std::cout << '\n';
  };
  show("odd-hole", oracles::find_odd_hole(g, budget));
  show("antihole", oracles::find_antihole(g, budget));
  show("prism", oracles::find_prism(g, budget));
  std::cout << "artemis: " << (clean ? "yes" : "no") << '\n';
  return clean ? kExitOk : kExitNotArtemis;
}

artemis::gen::Family family_or_throw(const std::string& name) {
  auto f = artemis::gen::parse_family(name);
  if (!f) throw CLI::ValidationError("--family", "expected chordal, bipartite or filtered-random");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal colouring of graphs with no odd hole, no antihole and no prism"};
  app.require_subcommand(1);

  std::string file;
  bool verify = false;
  bool report = false;
  std::string trace_path;
  auto* color = app.add_subcommand("color", "colour a DIMACS graph");
  color->add_flag("--verify", verify, "cross-check with exact oracles (small inputs)");
  color->add_option("--trace-json", trace_path, "write the contraction trace as JSON");
  color->add_flag("--report", report, "print a run report as JSON on stderr");
  color->add_option("FILE", file, "DIMACS .col file, or - for stdin")->required();

  std::string detect_file;
  auto* detect = app.add_subcommand("detect", "search for odd holes, antiholes and prisms");
  detect->add_option("FILE", detect_file, "DIMACS .col file, or - for stdin")->required();

  std::string family = "chordal";
  int n = 0;
  double density = 0.05;
  std::uint64_t seed = 1;
  auto* generate = app.add_subcommand("generate", "emit a random instance in DIMACS format");
  generate->add_option("--family", family, "chordal | bipartite | filtered-random")->required();
  generate->add_option("--n", n, "vertex count")->required()->check(CLI::PositiveNumber);
  generate->add_option("--density", density, "family density parameter")->required()->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", seed, "random seed")->required();

  std::vector<int> sizes;
  auto* bench = app.add_subcommand("bench", "operation-count scaling over instance sizes");
  bench->add_option("--family", family, "chordal | bipartite | filtered-random")->required();
  bench->add_option("--sizes", sizes, "ascending sizes, comma separated")->required()->delimiter(',');
  bench->add_option("--seed", seed, "random seed")->required();
  bench->add_option("--density", density, "family density parameter (default 0.05)")->check(CLI::Range(0.0, 1.0));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return run_color(file, verify, trace_path, report);
    if (*detect) return run_detect(detect_file);
    if (*generate) {
      std::cout << artemis::io::write_dimacs(artemis::gen::generate(family_or_throw(family), n, density, seed));
      return kExitOk;
    }
    if (*bench) {
      const auto r = artemis::bench::run_bench(family_or_throw(family), sizes, density, seed);
      std::cout << artemis::bench::format_table(r);
      return kExitOk;
    }
  } catch (const artemis::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const artemis::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const artemis::NotArtemisError& e) {
    std::cerr << "not an Artemis graph: " << e.what() << '\n';
    return kExitNotArtemis;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
