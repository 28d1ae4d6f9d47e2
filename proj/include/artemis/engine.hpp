#pragma once

// Optimal colouring of graphs with no odd hole, no antihole of length >= 5
// and no prism, by repeated contraction of special even pairs.
//
// Pipeline for one contraction:
//   find_interesting      maximal interesting set T and C = C(T)
//   find_outer_path       minimal T-outer path, or none
//   find_even_pair        special even pair {a, b} from that path
//   find_special_even_pair  drives the chain T1, C1, T2, C2, ... descending
//                         into C(T) while no outer path exists
// color_artemis repeats this until the graph is a disjoint union of cliques,
// colours the residue greedily and lifts the colours back.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "artemis/graph.hpp"
#include "artemis/vertex_set.hpp"

namespace artemis {

/// Basic-operation counters: one unit per vertex visit or adjacency entry
/// inspected, attributed to the phase that performed it.
struct OpCounters {
  std::uint64_t interesting = 0;
  std::uint64_t outer_path = 0;
  std::uint64_t even_pair = 0;
  /// Materialising induced levels of the chain.
  std::uint64_t chain = 0;
  /// Building contracted graphs.
  std::uint64_t contraction = 0;

  std::uint64_t total() const { return interesting + outer_path + even_pair + chain + contraction; }
  OpCounters& operator+=(const OpCounters& o);
};

struct MaximalInteresting {
  VertexSet t;
  VertexSet c;
};

struct DisjointCliques {
  /// Parts in order of smallest member, each ascending.
  std::vector<std::vector<int>> cliques;
};

using InterestingSetResult = std::variant<MaximalInteresting, DisjointCliques>;

/// Chordless path x, z1, ..., zp, y with x, y in C(T) and every zi outside T and C(T).
struct OuterPath {
  std::vector<int> vertices;

  int x() const { return vertices.front(); }
  int y() const { return vertices.back(); }
  /// Number of interior vertices p.
  int interior_size() const { return static_cast<int>(vertices.size()) - 2; }
  /// Number of edges, p + 1.
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct EvenPairState {
  VertexSet a_side;  // A = (N(v) ∩ C) \ N(y)
  VertexSet b_side;  // B = (N(w) ∩ C) \ N(x)
  VertexSet k;       // vertices of N(A) reached from B
  VertexSet l;       // vertices of N(B) reached from A
  int a = -1;
  int b = -1;
};

/// One level of the interesting-set chain, in ids of the graph passed to
/// find_special_even_pair.
struct ChainLevel {
  VertexSet t;
  VertexSet c;
  /// Size of the level's vertex set and of its edge set.
  int n = 0;
  std::int64_t m = 0;
  /// Components of the level outside T and C that the outer-path search
  /// visited (all of them when no outer path exists).
  int outer_components = 0;
};

struct SpecialEvenPair {
  int a = -1;
  int b = -1;
  std::vector<ChainLevel> chain;
  /// True when the pair comes from a nested level that was already a disjoint
  /// union of cliques rather than from an outer path.
  bool bottom_case = false;
  /// Chain level that produced the pair (1 = the graph itself).
  int depth = 0;
};

using SpecialPairResult = std::variant<SpecialEvenPair, DisjointCliques>;

struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
};

/// The subgraph an algorithm ran on: G[domain], with ids of `graph`.
struct LevelView {
  const Graph& graph;
  const VertexSet& domain;
  /// to_top[id in graph] = id in the graph find_special_even_pair was called on.
  std::span<const int> to_top;
  int depth;
};

/// Hooks for verification; every callback sees sets in the ids of its view.
class EngineObserver {
 public:
  virtual ~EngineObserver() = default;
  virtual void on_interesting(const LevelView&, const InterestingSetResult&) {}
  virtual void on_outer_path(const LevelView&, const MaximalInteresting&, const std::optional<OuterPath>&) {}
  virtual void on_even_pair(const LevelView&, const MaximalInteresting&, const OuterPath&, const EvenPairState&) {}
  virtual void on_bottom_pair(const LevelView&, const DisjointCliques&, int /*a*/, int /*b*/) {}
  virtual void on_contraction(const Graph& /*before*/, const ContractionStep&, const Graph& /*after*/) {}
};

struct EngineOptions {
  OpCounters* counters = nullptr;
  EngineObserver* observer = nullptr;
};

InterestingSetResult find_interesting(const Graph& g, const EngineOptions& opts = {});

/// Requires T maximal interesting in g and c == C(T).
std::optional<OuterPath> find_outer_path(const Graph& g, const VertexSet& t, const VertexSet& c,
                                         const EngineOptions& opts = {});

/// Requires `path` to be the minimal outer path returned by find_outer_path.
/// Throws NotArtemisError when a guarantee of the class fails.
EvenPairState find_even_pair(const Graph& g, const VertexSet& t, const VertexSet& c, const OuterPath& path,
                             const EngineOptions& opts = {});

SpecialPairResult find_special_even_pair(const Graph& g, const EngineOptions& opts = {});

struct ArtemisColoring {
  Coloring coloring;
  ContractionTrace trace;
  /// Clique partition of the final contracted graph.
  DisjointCliques residue;
};

ArtemisColoring color_artemis(const Graph& g, const EngineOptions& opts = {});

/// The j-th vertex (ascending id) of every clique gets colour j.
Coloring greedy_color_cliques(const DisjointCliques& partition);

/// Pulls a colouring of the trace's final graph back to the original graph.
/// Throws std::invalid_argument if the colouring does not fit the trace.
Coloring lift_coloring(const ContractionTrace& trace, const Coloring& c);
/// As above, and first checks that c is proper on `final_graph`.
Coloring lift_coloring(const ContractionTrace& trace, const Coloring& c, const Graph& final_graph);

bool is_proper(const Graph& g, const Coloring& c);

}  // namespace artemis
