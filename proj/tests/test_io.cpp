#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "artemis/bench.hpp"
#include "artemis/engine.hpp"
#include "artemis/error.hpp"
#include "artemis/generate.hpp"
#include "artemis/io.hpp"
#include "artemis/oracles.hpp"
#include "fixtures.hpp"

using namespace artemis;

namespace {

int error_line(std::string_view text) {
  try {
    io::parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_dimacs") {
  auto p3 = io::parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
  CHECK(p3.graph.n() == 3);
  CHECK(p3.graph.edges() == fixtures::path(3).edges());
  CHECK_FALSE(p3.edge_count_mismatch);

  auto k1 = io::parse_dimacs("c x\np edge 1 0");
  CHECK(k1.graph.n() == 1);
  CHECK(k1.graph.m() == 0);

  auto dup = io::parse_dimacs("p col 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  CHECK(dup.graph.m() == 2);
  CHECK(dup.duplicate_edges == 1);
  CHECK(dup.edge_count_mismatch);

  auto crlf = io::parse_dimacs("p edge 2 1\r\ne 1 2\r\n");
  CHECK(crlf.graph.m() == 1);
}

TEST_CASE("parse_dimacs errors carry the line") {
  CHECK(error_line("p edge 2 1\ne 1 3") == 2);
  CHECK(error_line("e 1 2\np edge 2 1") == 1);
  CHECK(error_line("c only a comment\n") == 2);
  CHECK(error_line("p edge 2 1\n\ne 1 1") == 3);
  CHECK(error_line("p edge 2 1\nx 1 2") == 2);
  CHECK(error_line("p edge two 1") == 1);
  CHECK(error_line("p edge 2 1\np edge 2 1") == 2);
  CHECK(error_line("p edge 2 1\ne 1") == 2);
}

TEST_CASE("write_coloring") {
  CHECK(io::write_coloring(Coloring{{0}, 1}) == "s 1\nv 1 1\n");
  CHECK(io::write_coloring(Coloring{}) == "s 0\n");
  auto c6 = color_artemis(fixtures::cycle(6));
  const std::string out = io::write_coloring(c6.coloring);
  CHECK(out.rfind("s 2\n", 0) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 7);
}

TEST_CASE("dimacs round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = fixtures::random_graph(1 + static_cast<int>(rng() % 30), 0.3, rng);
    const auto back = io::parse_dimacs(io::write_dimacs(g));
    CHECK(back.graph.n() == g.n());
    CHECK(back.graph.edges() == g.edges());
    CHECK_FALSE(back.edge_count_mismatch);
  }
}

TEST_CASE("trace_json") {
  auto r = color_artemis(fixtures::path(4));
  const std::string json = io::trace_json(r);
  CHECK(json.find("\"original_n\": 4") != std::string::npos);
  CHECK(json.find("\"num_colors\": 2") != std::string::npos);
  CHECK(json == io::trace_json(color_artemis(fixtures::path(4))));
}

TEST_CASE("generator families") {
  CHECK(gen::parse_family("chordal") == gen::Family::Chordal);
  CHECK(gen::parse_family("filtered-random") == gen::Family::FilteredRandom);
  CHECK_FALSE(gen::parse_family("planar").has_value());

  for (auto family : {gen::Family::Chordal, gen::Family::Bipartite, gen::Family::FilteredRandom}) {
    CAPTURE(gen::family_name(family));
    const auto a = gen::generate(family, 10, 0.4, 77);
    const auto b = gen::generate(family, 10, 0.4, 77);
    CHECK(io::write_dimacs(a) == io::write_dimacs(b));
    for (std::uint64_t seed = 0; seed < 30; ++seed)
      CHECK(oracles::is_artemis(gen::generate(family, 12, 0.3, seed)).artemis);
  }
  CHECK_THROWS_AS(gen::generate(gen::Family::FilteredRandom, 13, 0.3, 1), BudgetExceeded);
  CHECK_THROWS(gen::generate(gen::Family::Chordal, 0, 0.3, 1));
  CHECK(gen::generate(gen::Family::Chordal, 1, 0.3, 1).n() == 1);
}

TEST_CASE("bench") {
  const std::vector<double> x{1, 10, 100};
  const std::vector<double> y{3, 300, 30000};
  auto slope = bench::loglog_slope(x, y);
  REQUIRE(slope.has_value());
  CHECK(*slope == doctest::Approx(2.0));
  CHECK_FALSE(bench::loglog_slope(std::vector<double>{5}, std::vector<double>{5}).has_value());

  const std::vector<int> one{20};
  auto single = bench::run_bench(gen::Family::Chordal, one, 0.2, 1);
  CHECK(single.rows.size() == 1);
  CHECK_FALSE(single.slope_run_vs_n2m.has_value());
  CHECK_FALSE(single.slope_search_vs_nm.has_value());

  const std::vector<int> sizes{20, 40, 80};
  auto rep = bench::run_bench(gen::Family::Chordal, sizes, 0.2, 1);
  REQUIRE(rep.rows.size() == 3);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i].run.total() > rep.rows[i - 1].run.total());
  CHECK(rep.slope_run_vs_n2m.has_value());
  CHECK(bench::format_table(rep).find("80") != std::string::npos);
}
