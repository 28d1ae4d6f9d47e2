#include "artemis/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace artemis {

Graph::Graph(int n, std::span<const Edge> edges, int matrix_threshold) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  finish(matrix_threshold);
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency, int matrix_threshold) {
  Graph g;
  g.adjacency_ = std::move(adjacency);
  g.finish(matrix_threshold);
  return g;
}

void Graph::finish(int matrix_threshold) {
  matrix_threshold_ = matrix_threshold;
  std::int64_t degree_sum = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += static_cast<std::int64_t>(nbrs.size());
  }
  m_ = degree_sum / 2;
  rows_.clear();
  if (n() <= matrix_threshold) {
    rows_.reserve(adjacency_.size());
    for (const auto& nbrs : adjacency_) rows_.push_back(VertexSet::of(n(), nbrs));
  }
}

bool Graph::adjacent(int u, int v) const {
  if (has_matrix()) return rows_[static_cast<std::size_t>(u)].contains(v);
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::neighbor_set(int v) const {
  if (has_matrix()) return row(v);
  return VertexSet::of(n(), neighbors(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::pair<Graph, ContractionStep> contract(const Graph& g, int a, int b) {
  const int n = g.n();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("contract: vertex out of range");
  if (a == b) throw std::invalid_argument("contract: a and b must differ");
  if (g.adjacent(a, b))
    throw std::invalid_argument("contract: " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");

  const int keep = std::min(a, b);
  const int drop = std::max(a, b);
  ContractionStep step;
  step.a = a;
  step.b = b;
  step.merged = keep;
  step.vertex_map.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) step.vertex_map[static_cast<std::size_t>(v)] = v < drop ? v : v - 1;
  step.vertex_map[static_cast<std::size_t>(drop)] = keep;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n - 1));
  for (int u = 0; u < n; ++u) {
    const int nu = step.vertex_map[static_cast<std::size_t>(u)];
    auto& out = adj[static_cast<std::size_t>(nu)];
    for (int v : g.neighbors(u)) out.push_back(step.vertex_map[static_cast<std::size_t>(v)]);
  }
  return {Graph::from_adjacency(std::move(adj), g.matrix_threshold()), std::move(step)};
}

Graph complement(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = nb.begin();
    for (int v = 0; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (v != u && (it == nb.end() || *it != v)) adj[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adj), g.matrix_threshold());
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
  InducedGraph out;
  out.to_parent = s.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (int v : g.neighbors(out.to_parent[i]))
      if (int lv = local[static_cast<std::size_t>(v)]; lv >= 0) adj[i].push_back(lv);
  out.graph = Graph::from_adjacency(std::move(adj), g.matrix_threshold());
  return out;
}

VertexSet common_complete(const Graph& g, const VertexSet& t) {
  VertexSet c = VertexSet::full(g.n());
  t.for_each([&](int v) {
    if (g.has_matrix()) {
      c &= g.row(v);
    } else {
      c &= g.neighbor_set(v);
    }
  });
  c -= t;
  return c;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const std::size_t k = s.size();
  if (k <= 1) return true;
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    std::size_t inside;
    if (g.has_matrix()) {
      inside = g.row(v).intersection_size(s);
    } else {
      inside = 0;
      for (int w : g.neighbors(v)) inside += s.contains(w) ? 1 : 0;
    }
    ok = inside == k - 1;
  });
  return ok;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  std::vector<int> stack;
  s.for_each([&](int root) {
    if (seen.contains(root)) return;
    VertexSet comp(g.n());
    seen.insert(root);
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (int w : g.neighbors(u))
        if (s.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighbor_set(v)); }

std::vector<int> SearchForest::path_to(int v) const {
  std::vector<int> path;
  for (int u = v; u >= 0; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

SearchForest bfs_from_to(const Graph& g, const VertexSet& domain, const VertexSet& x, const VertexSet& y) {
  SearchForest f;
  f.parent.assign(static_cast<std::size_t>(g.n()), SearchForest::kUnreached);
  f.reached_targets = VertexSet(g.n());
  std::deque<int> queue;
  x.for_each([&](int r) {
    f.parent[static_cast<std::size_t>(r)] = SearchForest::kRoot;
    queue.push_back(r);
  });
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    f.order.push_back(u);
    for (int w : g.neighbors(u)) {
      if (!domain.contains(w) || f.reached(w)) continue;
      f.parent[static_cast<std::size_t>(w)] = u;
      if (y.contains(w)) {
        f.reached_targets.insert(w);
      } else {
        queue.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace artemis
