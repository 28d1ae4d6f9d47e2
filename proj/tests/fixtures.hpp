#pragma once

#include <random>
#include <vector>

#include "artemis/graph.hpp"

namespace fixtures {

using artemis::Edge;
using artemis::Graph;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph prism() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

/// Disjoint union, second graph's ids shifted by a.n().
inline Graph disjoint(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline artemis::VertexSet set(int n, std::initializer_list<int> members) { return artemis::VertexSet(n, members); }

}  // namespace fixtures
