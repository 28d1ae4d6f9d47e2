#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "artemis/error.hpp"
#include "artemis/generate.hpp"
#include "artemis/graph.hpp"
#include "artemis/oracles.hpp"
#include "fixtures.hpp"

using namespace artemis;
using namespace artemis::oracles;
using fixtures::set;

namespace {

using Paths = std::vector<std::vector<int>>;

VertexSet mask_set(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(v);
  return s;
}

int induced_degree(const Graph& g, std::uint32_t mask, int v) {
  int d = 0;
  for (int u : g.neighbors(v))
    if (mask >> u & 1U) ++d;
  return d;
}

bool connected(const Graph& g, std::uint32_t mask) {
  return components(g, mask_set(g.n(), mask)).size() == 1;
}

// Induced subgraph is a cycle: 2-regular and connected.
bool naive_has_odd_hole(const Graph& g) {
  for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask) {
    const int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    bool regular = true;
    for (int v = 0; v < g.n() && regular; ++v)
      if (mask >> v & 1U) regular = induced_degree(g, mask, v) == 2;
    if (regular && connected(g, mask)) return true;
  }
  return false;
}

bool naive_has_antihole(const Graph& g) {
  const Graph gc = complement(g);
  for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask) {
    const int k = std::popcount(mask);
    if (k < 6) continue;
    bool regular = true;
    for (int v = 0; v < g.n() && regular; ++v)
      if (mask >> v & 1U) regular = induced_degree(gc, mask, v) == 2;
    if (regular && connected(gc, mask)) return true;
  }
  return false;
}

// Exactly two triangles, disjoint; removing their edges leaves three paths,
// each joining one vertex of each triangle, covering the subset.
bool naive_is_prism(const Graph& g, std::uint32_t mask) {
  const int k = std::popcount(mask);
  if (k < 6) return false;
  const auto sub = induced(g, mask_set(g.n(), mask));
  const Graph& h = sub.graph;
  if (h.m() != k + 3) return false;
  std::vector<std::uint32_t> triangles;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        if (h.adjacent(a, b) && h.adjacent(b, c) && h.adjacent(a, c))
          triangles.push_back((1U << a) | (1U << b) | (1U << c));
  if (triangles.size() != 2 || (triangles[0] & triangles[1])) return false;
  std::vector<Edge> rest;
  for (auto [u, v] : h.edges()) {
    const std::uint32_t uv = (1U << u) | (1U << v);
    if ((uv & triangles[0]) == uv || (uv & triangles[1]) == uv) continue;
    rest.emplace_back(u, v);
  }
  const Graph r(k, rest);
  const auto parts = components(r, VertexSet::full(k));
  if (parts.size() != 3) return false;
  for (const auto& part : parts) {
    std::int64_t inner_edges = 0;
    int in_t1 = 0, in_t2 = 0;
    bool ok = true;
    part.for_each([&](int v) {
      if (r.degree(v) > 2) ok = false;
      inner_edges += r.degree(v);
      in_t1 += triangles[0] >> v & 1U;
      in_t2 += triangles[1] >> v & 1U;
    });
    if (!ok || inner_edges / 2 != static_cast<std::int64_t>(part.size()) - 1 || in_t1 != 1 || in_t2 != 1)
      return false;
  }
  return true;
}

bool naive_has_prism(const Graph& g) {
  for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask)
    if (naive_is_prism(g, mask)) return true;
  return false;
}

Graph with_chord(const Graph& g, int u, int v) {
  auto e = g.edges();
  e.emplace_back(u, v);
  return Graph(g.n(), e);
}

}  // namespace

TEST_CASE("find_odd_hole") {
  auto w = find_odd_hole(fixtures::cycle(5));
  CHECK(w.kind == StructureKind::OddHole);
  CHECK(w.vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_odd_hole(fixtures::cycle(6)));
  // a chord at distance two leaves a triangle and a 6-hole
  CHECK_FALSE(find_odd_hole(with_chord(fixtures::cycle(7), 0, 2)));
  // a chord at distance three leaves a 4-hole and a 5-hole
  CHECK(find_odd_hole(with_chord(fixtures::cycle(7), 0, 3)).vertices.size() == 5);
}

TEST_CASE("find_antihole") {
  auto w = find_antihole(complement(fixtures::cycle(7)));
  CHECK(w.kind == StructureKind::Antihole);
  CHECK(w.vertices.size() == 7);
  CHECK(verify_witness(complement(fixtures::cycle(7)), w));
  CHECK_FALSE(find_antihole(fixtures::cycle(6)));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph b = gen::generate(gen::Family::Bipartite, 10, 0.6, rng());
    CHECK_FALSE(find_antihole(b));
  }
}

TEST_CASE("find_prism") {
  auto w = find_prism(fixtures::prism());
  CHECK(w.kind == StructureKind::Prism);
  CHECK(w.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(find_prism(complement(fixtures::cycle(6))).kind == StructureKind::Prism);
  CHECK_FALSE(find_prism(fixtures::cycle(6)));

  // triangles 0-1-2 and 3-4-5 joined by 0-6-3, 1-4, 2-7-5
  const std::vector<Edge> long_prism{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                     {0, 6}, {6, 3}, {1, 4}, {2, 7}, {7, 5}};
  const Graph lp(8, long_prism);
  CHECK(find_prism(lp).vertices.size() == 8);
  CHECK(naive_is_prism(lp, 0xFF));
}

TEST_CASE("is_artemis") {
  auto v = is_artemis(fixtures::cycle(5));
  CHECK_FALSE(v.artemis);
  CHECK(v.witness.kind == StructureKind::OddHole);
  CHECK(is_artemis(fixtures::cycle(6)).artemis);
  CHECK_FALSE(is_artemis(fixtures::prism()).artemis);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    CHECK(is_artemis(gen::generate(gen::Family::Chordal, 12, 0.3, rng())).artemis);
    CHECK(is_artemis(gen::generate(gen::Family::Bipartite, 12, 0.4, rng())).artemis);
  }
}

TEST_CASE("detectors match subset characterisations") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const Graph g = fixtures::random_graph(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng);
    CAPTURE(n);
    const auto hole = find_odd_hole(g);
    const auto anti = find_antihole(g);
    const auto prism = find_prism(g);
    CHECK(static_cast<bool>(hole) == naive_has_odd_hole(g));
    CHECK(static_cast<bool>(anti) == naive_has_antihole(g));
    CHECK(static_cast<bool>(prism) == naive_has_prism(g));
    for (const auto* w : {&hole, &anti, &prism})
      if (*w) CHECK(verify_witness(g, *w));
    if (prism) {
      std::uint32_t mask = 0;
      for (int v : prism.vertices) mask |= 1U << v;
      CHECK(naive_is_prism(g, mask));
    }
  }
}

TEST_CASE("budget refusals") {
  const Graph big = fixtures::cycle(13);
  CHECK_THROWS_AS(find_odd_hole(big), BudgetExceeded);
  CHECK_THROWS_AS(find_prism(big), BudgetExceeded);
  CHECK_THROWS_AS(is_artemis(big), BudgetExceeded);
  CHECK_THROWS_AS(chromatic_number_exact(fixtures::cycle(17)), BudgetExceeded);
  CHECK(chromatic_number_exact(fixtures::cycle(16)) == 2);
  OracleBudget wide;
  wide.max_n = 13;
  CHECK(find_odd_hole(big, wide).vertices.size() == 13);
}

TEST_CASE("enumerate_chordless_paths") {
  CHECK(enumerate_chordless_paths(fixtures::path(4), 0, 3) == Paths{{0, 1, 2, 3}});
  CHECK(enumerate_chordless_paths(fixtures::cycle(6), 0, 2) == Paths{{0, 1, 2}, {0, 5, 4, 3, 2}});
  CHECK(enumerate_chordless_paths(fixtures::complete(4), 1, 3) == Paths{{1, 3}});
}

TEST_CASE("even pairs") {
  const Graph c6 = fixtures::cycle(6);
  CHECK(is_even_pair_exact(c6, 0, 2));
  CHECK_FALSE(is_even_pair_exact(c6, 0, 3));
  const Graph two = fixtures::disjoint(fixtures::complete(2), fixtures::complete(2));
  CHECK(is_even_pair_exact(two, 0, 2));
  CHECK_THROWS_AS(is_even_pair_exact(c6, 0, 1), std::invalid_argument);

  CHECK(is_special_even_pair_exact(c6, 0, 2));
  CHECK_FALSE(is_special_even_pair_exact(c6, 0, 3));
  CHECK(is_special_even_pair_exact(fixtures::path(4), 0, 2));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = fixtures::random_graph(8, 0.35, rng);
    for (int x = 0; x < 8; ++x)
      for (int y = x + 1; y < 8; ++y) {
        if (g.adjacent(x, y)) continue;
        const bool even = is_even_pair_exact(g, x, y);
        CHECK(even == is_even_pair_exact(g, y, x));
        if (!even) CHECK_FALSE(is_special_even_pair_exact(g, x, y));
      }
  }
}

TEST_CASE("chromatic number and clique number") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(chromatic_number_exact(fixtures::complete(n)) == n);
    CHECK(max_clique_exact(fixtures::complete(n)) == n);
  }
  CHECK(chromatic_number_exact(fixtures::cycle(6)) == 2);
  CHECK(max_clique_exact(fixtures::cycle(6)) == 2);
  CHECK(chromatic_number_exact(fixtures::prism()) == 3);
  CHECK(max_clique_exact(fixtures::prism()) == 3);
  CHECK(chromatic_number_exact(fixtures::cycle(5)) == 3);
  CHECK(chromatic_number_exact(Graph(0, std::vector<Edge>{})) == 0);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = fixtures::random_graph(1 + static_cast<int>(rng() % 12), 0.5, rng);
    const int chi = chromatic_number_exact(g);
    const int omega = max_clique_exact(g);
    CHECK(chi >= omega);
    // brute check of omega on the subsets
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask)
      if (std::popcount(mask) > best && is_clique(g, mask_set(g.n(), mask))) best = std::popcount(mask);
    CHECK(omega == best);
  }
}

TEST_CASE("interesting sets") {
  const Graph p4 = fixtures::path(4);
  const Graph c4 = fixtures::cycle(4);
  CHECK(is_interesting_exact(p4, set(4, {1})));
  CHECK(brute_maximal_interesting_check(p4, set(4, {1})));
  CHECK(is_interesting_exact(c4, set(4, {1})));
  CHECK_FALSE(brute_maximal_interesting_check(c4, set(4, {1})));
  CHECK(brute_maximal_interesting_check(c4, set(4, {1, 3})));
  // {0, 1} is not co-connected
  CHECK_FALSE(is_interesting_exact(p4, set(4, {0, 1})));
  CHECK_FALSE(is_interesting_exact(p4, VertexSet(4)));
}

TEST_CASE("outer paths") {
  const Graph c6 = fixtures::cycle(6);
  const auto t = set(6, {1});
  const auto c = set(6, {0, 2});
  CHECK(enumerate_outer_paths(c6, t) == Paths{{0, 5, 4, 3, 2}});
  CHECK(brute_minimal_outer_path_check(c6, t, c, {0, 5, 4, 3, 2}));
  CHECK(outer_path_criterion(c6, t, c));
  // interior vertex in C(T)
  CHECK_FALSE(brute_minimal_outer_path_check(c6, t, c, {0, 1, 2}));

  // odd length: C5 is outside the class, and its outer path has length 3
  const Graph c5 = fixtures::cycle(5);
  CHECK(enumerate_outer_paths(c5, set(5, {1})) == Paths{{0, 4, 3, 2}});
  CHECK_FALSE(brute_minimal_outer_path_check(c5, set(5, {1}), set(5, {0, 2}), {0, 4, 3, 2}));

  CHECK_FALSE(outer_path_criterion(fixtures::path(4), set(4, {1}), set(4, {0, 2})));

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = fixtures::random_graph(8, 0.4, rng);
    VertexSet tt(8);
    tt.insert(static_cast<int>(rng() % 8));
    const auto cc = common_complete(g, tt);
    CHECK(outer_path_criterion(g, tt, cc) == !enumerate_outer_paths(g, tt).empty());
  }
}

TEST_CASE("chi and omega under contraction") {
  CHECK(fonlupt_uhry_check(fixtures::cycle(6), 0, 2));
  CHECK(fonlupt_uhry_check(fixtures::path(4), 0, 2));
  CHECK(fonlupt_uhry_check(fixtures::disjoint(fixtures::complete(2), fixtures::complete(2)), 0, 2));
  // 0 and 3 in C6 are an odd pair; contracting them makes a triangle
  CHECK_FALSE(fonlupt_uhry_check(fixtures::cycle(6), 0, 3));
}
