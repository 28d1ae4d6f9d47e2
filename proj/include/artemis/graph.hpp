#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "artemis/vertex_set.hpp"

namespace artemis {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbourhoods are kept as sorted vectors. When n does not exceed the
/// matrix threshold a bit-indexed adjacency matrix is built as well, giving
/// O(1) adjacency tests and word-parallel row operations; above it,
/// adjacent() falls back to binary search.
class Graph {
 public:
  static constexpr int kDefaultMatrixThreshold = 4096;

  Graph() = default;

  /// Throws std::invalid_argument on an endpoint outside [0, n) or a
  /// self-loop. Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges, int matrix_threshold = kDefaultMatrixThreshold);

  /// Adopts pre-built adjacency lists. Lists must be symmetric, loop-free;
  /// they are sorted and deduplicated here.
  static Graph from_adjacency(std::vector<std::vector<int>> adjacency,
                              int matrix_threshold = kDefaultMatrixThreshold);

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t m() const { return m_; }

  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

  bool has_matrix() const { return !rows_.empty(); }
  /// Adjacency row of v as a VertexSet. Requires has_matrix().
  const VertexSet& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  /// N(v) as a VertexSet, built from the matrix row or the list.
  VertexSet neighbor_set(int v) const;

  std::vector<Edge> edges() const;
  int matrix_threshold() const { return matrix_threshold_; }

 private:
  void finish(int matrix_threshold);

  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexSet> rows_;
  std::int64_t m_ = 0;
  int matrix_threshold_ = kDefaultMatrixThreshold;
};

/// Bookkeeping for one contraction G -> G/ab.
struct ContractionStep {
  int a = -1;
  int b = -1;
  /// Id of the merged vertex in the successor graph.
  int merged = -1;
  /// vertex_map[old id] = new id; a and b both map to merged.
  std::vector<int> vertex_map;
  /// Depth of the interesting-set chain that produced the pair (1 = top level).
  int chain_depth = 0;
};

struct ContractionTrace {
  int original_n = 0;
  std::vector<ContractionStep> steps;
};

/// G/ab. The merged vertex takes the smaller of the two ids; the larger id is
/// removed and every id above it shifts down by one. Throws
/// std::invalid_argument if a == b, either id is out of range, or a ~ b.
std::pair<Graph, ContractionStep> contract(const Graph& g, int a, int b);

Graph complement(const Graph& g);

struct InducedGraph {
  Graph graph;
  /// to_parent[new id] = id in the parent graph, ascending.
  std::vector<int> to_parent;
};

InducedGraph induced(const Graph& g, const VertexSet& s);

/// C(T): vertices outside T adjacent to every vertex of T.
VertexSet common_complete(const Graph& g, const VertexSet& t);

/// True when every pair in s is adjacent; vacuously true for |s| <= 1.
bool is_clique(const Graph& g, const VertexSet& s);

/// Connected components of G[s], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

bool is_simplicial(const Graph& g, int v);

/// Result of a breadth-first search from X to Y.
struct SearchForest {
  static constexpr int kUnreached = -1;
  static constexpr int kRoot = -2;

  /// parent[v]: kRoot for members of X, kUnreached if never reached.
  std::vector<int> parent;
  /// Vertices in dequeue order (never contains members of Y).
  std::vector<int> order;
  VertexSet reached_targets;

  bool reached(int v) const { return parent[static_cast<std::size_t>(v)] != kUnreached; }
  /// Root-to-v path following parent links.
  std::vector<int> path_to(int v) const;
};

/// BFS restricted to G[domain]: every member of X is queued up front (in
/// ascending id), members of Y are recorded when first seen but never
/// expanded. Neighbours are scanned in ascending id, so the result is fully
/// determined by the input. Requires X, Y within domain and disjoint.
SearchForest bfs_from_to(const Graph& g, const VertexSet& domain, const VertexSet& x, const VertexSet& y);

}  // namespace artemis
