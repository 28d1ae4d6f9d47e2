#include "artemis/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "artemis/error.hpp"

namespace artemis::gen {
namespace {

constexpr int kFilterAttempts = 200000;

Graph chordal(int n, double density, std::mt19937_64& rng) {
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
    tree[static_cast<std::size_t>(i)].push_back(p);
    tree[static_cast<std::size_t>(p)].push_back(i);
  }
  const int spread = static_cast<int>(std::lround(2.0 * density * (n - 1)));
  std::vector<VertexSet> subtree;
  subtree.reserve(static_cast<std::size_t>(n));
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    const int center = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int target = 1 + std::uniform_int_distribution<int>(0, std::max(0, spread))(rng);
    VertexSet s(n);
    s.insert(center);
    frontier.assign(tree[static_cast<std::size_t>(center)].begin(), tree[static_cast<std::size_t>(center)].end());
    int size = 1;
    while (size < target && !frontier.empty()) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
      const int x = frontier[k];
      frontier[k] = frontier.back();
      frontier.pop_back();
      if (s.contains(x)) continue;
      s.insert(x);
      ++size;
      for (int y : tree[static_cast<std::size_t>(x)])
        if (!s.contains(y)) frontier.push_back(y);
    }
    subtree.push_back(std::move(s));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (subtree[static_cast<std::size_t>(u)].intersects(subtree[static_cast<std::size_t>(v)])) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph bipartite(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution edge(std::clamp(density, 0.0, 1.0));
  std::vector<bool> side(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = coin(rng);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && edge(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gnp(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(std::clamp(density, 0.0, 1.0));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "chordal") return Family::Chordal;
  if (name == "bipartite") return Family::Bipartite;
  if (name == "filtered-random") return Family::FilteredRandom;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Chordal: return "chordal";
    case Family::Bipartite: return "bipartite";
    case Family::FilteredRandom: return "filtered-random";
  }
  return "unknown";
}

Graph generate(Family family, int n, double density, std::uint64_t seed, const oracles::OracleBudget& budget) {
  if (n < 1) throw std::invalid_argument("generate: n must be at least 1");
  std::mt19937_64 rng(seed);
  switch (family) {
    case Family::Chordal: return chordal(n, density, rng);
    case Family::Bipartite: return bipartite(n, density, rng);
    case Family::FilteredRandom: {
      if (n > budget.max_n)
        throw BudgetExceeded("filtered-random: n=" + std::to_string(n) + " exceeds oracle budget " +
                             std::to_string(budget.max_n));
      for (int attempt = 0; attempt < kFilterAttempts; ++attempt) {
        Graph g = gnp(n, density, rng);
        if (oracles::is_artemis(g, budget).artemis) return g;
      }
      throw std::runtime_error("filtered-random: no acceptable graph after " + std::to_string(kFilterAttempts) +
                               " samples");
    }
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace artemis::gen
