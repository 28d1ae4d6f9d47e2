#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "artemis/engine.hpp"
#include "artemis/graph.hpp"
#include "artemis/oracles.hpp"
#include "fixtures.hpp"

using namespace artemis;
using fixtures::set;

TEST_CASE("construction") {
  const Graph p4 = fixtures::path(4);
  CHECK(p4.n() == 4);
  CHECK(p4.m() == 3);
  CHECK(p4.adjacent(1, 2));
  CHECK_FALSE(p4.adjacent(0, 2));

  const Graph k1(1, std::vector<Edge>{});
  CHECK(k1.n() == 1);
  CHECK(k1.m() == 0);

  CHECK(fixtures::prism().m() == 9);

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph(2, dup).m() == 1);

  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{-1, 0}}), std::invalid_argument);
}

TEST_CASE("list-only graphs answer adjacency like matrix graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = fixtures::random_graph(20, 0.3, rng);
    const Graph lists(g.n(), g.edges(), /*matrix_threshold=*/0);
    CHECK(g.has_matrix());
    CHECK_FALSE(lists.has_matrix());
    for (int u = 0; u < g.n(); ++u) {
      CHECK(g.neighbor_set(u) == lists.neighbor_set(u));
      for (int v = 0; v < g.n(); ++v) CHECK(g.adjacent(u, v) == lists.adjacent(u, v));
    }
  }
}

TEST_CASE("contract") {
  SUBCASE("P4 (0,2)") {
    auto [h, step] = contract(fixtures::path(4), 0, 2);
    CHECK(h.n() == 3);
    CHECK(h.m() == 2);
    CHECK(step.merged == 0);
    CHECK(step.vertex_map == std::vector<int>{0, 1, 0, 2});
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(0, 2));
    CHECK_FALSE(h.adjacent(1, 2));
  }
  SUBCASE("C6 (0,2)") {
    auto [h, step] = contract(fixtures::cycle(6), 0, 2);
    CHECK(h.n() == 5);
    // old 3,4,5 become 2,3,4
    CHECK(h.neighbor_set(step.merged) == set(5, {1, 2, 4}));
    // merged-3-4-5 is a 4-hole
    CHECK(h.adjacent(2, 3));
    CHECK(h.adjacent(3, 4));
    CHECK_FALSE(h.adjacent(0, 3));
    CHECK_FALSE(h.adjacent(2, 4));
  }
  SUBCASE("two isolated vertices") {
    auto [h, step] = contract(Graph(2, std::vector<Edge>{}), 0, 1);
    CHECK(h.n() == 1);
    CHECK(h.m() == 0);
  }
  SUBCASE("argument order does not matter") {
    auto [h1, s1] = contract(fixtures::cycle(6), 0, 2);
    auto [h2, s2] = contract(fixtures::cycle(6), 2, 0);
    CHECK(h1.edges() == h2.edges());
    CHECK(s1.vertex_map == s2.vertex_map);
  }
  SUBCASE("bad pairs") {
    CHECK_THROWS_AS(contract(fixtures::path(4), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(contract(fixtures::path(4), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(contract(fixtures::path(4), 0, 4), std::invalid_argument);
  }
}

TEST_CASE("complement") {
  CHECK(complement(fixtures::complete(3)).m() == 0);

  const Graph c5bar = complement(fixtures::cycle(5));
  CHECK(c5bar.m() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5bar.degree(v) == 2);
  CHECK(components(c5bar, VertexSet::full(5)).size() == 1);

  const Graph c6bar = complement(fixtures::cycle(6));
  CHECK(oracles::induces_prism(c6bar, 0b111111));
}

TEST_CASE("induced") {
  const auto sub = induced(fixtures::cycle(6), set(6, {0, 1, 2}));
  CHECK(sub.graph.n() == 3);
  CHECK(sub.graph.m() == 2);
  CHECK(sub.to_parent == std::vector<int>{0, 1, 2});
  CHECK(sub.graph.degree(1) == 2);

  const Graph prism = fixtures::prism();
  const auto all = induced(prism, VertexSet::full(6));
  CHECK(all.graph.edges() == prism.edges());

  CHECK(induced(prism, VertexSet(6)).graph.n() == 0);
}

TEST_CASE("common_complete") {
  CHECK(common_complete(fixtures::path(4), set(4, {1})) == set(4, {0, 2}));
  CHECK(common_complete(fixtures::complete(4), set(4, {0})) == set(4, {1, 2, 3}));
  CHECK(common_complete(fixtures::cycle(6), set(6, {0, 3})).empty());
}

TEST_CASE("is_clique") {
  const Graph p4 = fixtures::path(4);
  CHECK(is_clique(p4, VertexSet(4)));
  CHECK_FALSE(is_clique(p4, set(4, {0, 2})));
  CHECK(is_clique(fixtures::prism(), set(6, {3, 4, 5})));
}

TEST_CASE("components") {
  const Graph c6 = fixtures::cycle(6);
  auto parts = components(c6, set(6, {3, 4, 5}));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == set(6, {3, 4, 5}));

  const Graph k3k2 = fixtures::disjoint(fixtures::complete(3), fixtures::complete(2));
  parts = components(k3k2, VertexSet::full(5));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == set(5, {0, 1, 2}));
  CHECK(parts[1] == set(5, {3, 4}));

  CHECK(components(k3k2, VertexSet(5)).empty());
}

TEST_CASE("bfs_from_to") {
  SUBCASE("C6 without vertex 1") {
    const auto f = bfs_from_to(fixtures::cycle(6), set(6, {0, 2, 3, 4, 5}), set(6, {3}), set(6, {0, 2}));
    CHECK(f.order == std::vector<int>{3, 4, 5});
    CHECK(f.reached_targets == set(6, {0, 2}));
    CHECK(f.parent[2] == 3);
    CHECK(f.parent[0] == 5);
    CHECK(f.path_to(0) == std::vector<int>{3, 4, 5, 0});
  }
  SUBCASE("empty target set is a plain BFS") {
    const Graph g = fixtures::disjoint(fixtures::path(3), fixtures::complete(2));
    const auto f = bfs_from_to(g, VertexSet::full(5), set(5, {0}), VertexSet(5));
    CHECK(f.order == std::vector<int>{0, 1, 2});
    CHECK(f.parent[0] == SearchForest::kRoot);
    CHECK(f.parent[2] == 1);
    CHECK_FALSE(f.reached(3));
  }
  SUBCASE("adjacent target is a leaf") {
    const auto f = bfs_from_to(fixtures::path(3), VertexSet::full(3), set(3, {0}), set(3, {1}));
    CHECK(f.reached_targets == set(3, {1}));
    CHECK_FALSE(f.reached(2));
    CHECK(f.order == std::vector<int>{0});
  }
}

TEST_CASE("is_simplicial") {
  CHECK(is_simplicial(fixtures::path(4), 0));
  CHECK_FALSE(is_simplicial(fixtures::path(3), 1));
  for (int v = 0; v < 5; ++v) CHECK(is_simplicial(fixtures::complete(5), v));
}

TEST_CASE("properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = fixtures::random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
    CAPTURE(n);

    CHECK(complement(complement(g)).edges() == g.edges());

    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.insert(v);
    std::size_t total = 0;
    for (const auto& part : components(g, s)) {
      CHECK(part.is_subset_of(s));
      total += part.size();
    }
    CHECK(total == s.size());

    if (!s.empty()) CHECK_FALSE(common_complete(g, s).intersects(s));

    // contracting any non-adjacent pair and lifting a proper colouring stays proper
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!g.adjacent(a, b)) pairs.emplace_back(a, b);
    if (pairs.empty()) continue;
    auto [a, b] = pairs[rng() % pairs.size()];
    auto [h, step] = contract(g, a, b);
    CHECK(h.n() == n - 1);
    CHECK(step.vertex_map[static_cast<std::size_t>(a)] == step.vertex_map[static_cast<std::size_t>(b)]);
    Coloring hc;
    hc.color.resize(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) hc.color[static_cast<std::size_t>(v)] = v;
    hc.num_colors = h.n();
    ContractionTrace trace{n, {step}};
    const Coloring lifted = lift_coloring(trace, hc, h);
    CHECK(is_proper(g, lifted));
    CHECK(lifted.color[static_cast<std::size_t>(a)] == lifted.color[static_cast<std::size_t>(b)]);
  }
}
