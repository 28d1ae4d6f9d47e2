#pragma once

// Exponential-time reference implementations of the class definitions and
// of every structure the colouring engine produces. Intended for small
// graphs only: every entry point refuses inputs beyond its budget with
// BudgetExceeded instead of running unbounded.

#include <cstdint>
#include <string_view>
#include <vector>

#include "artemis/graph.hpp"
#include "artemis/vertex_set.hpp"

namespace artemis::oracles {

struct OracleBudget {
  /// Cap for subset-enumeration detectors and path enumeration.
  int max_n = 12;
  /// Cap for the branch-and-bound chromatic number and clique number.
  int max_n_exact = 16;
  std::uint64_t max_paths = 1'000'000;
};

enum class StructureKind { None, OddHole, Antihole, Prism };

std::string_view kind_name(StructureKind k);

struct StructureWitness {
  StructureKind kind = StructureKind::None;
  /// Holes and antiholes: vertices in cycle order (cycle order of the
  /// complement for antiholes). Prisms: the vertex set, ascending.
  std::vector<int> vertices;

  explicit operator bool() const { return kind != StructureKind::None; }
};

/// Chordless cycle of odd length >= 5.
StructureWitness find_odd_hole(const Graph& g, const OracleBudget& budget = {});

/// Hole of length >= 6 in the complement. Length-5 antiholes are 5-holes and
/// are reported by find_odd_hole.
StructureWitness find_antihole(const Graph& g, const OracleBudget& budget = {});

/// First vertex subset (ascending bitmask order) inducing a prism.
StructureWitness find_prism(const Graph& g, const OracleBudget& budget = {});

struct ArtemisVerdict {
  bool artemis = true;
  StructureWitness witness;
};

ArtemisVerdict is_artemis(const Graph& g, const OracleBudget& budget = {});

/// Re-checks a witness against the structural definition of its kind.
bool verify_witness(const Graph& g, const StructureWitness& w);

/// True if the subset `mask` of g induces a prism. Requires n <= 64.
bool induces_prism(const Graph& g, std::uint64_t mask);

/// All chordless x-y paths, in DFS order with ascending-id extension.
std::vector<std::vector<int>> enumerate_chordless_paths(const Graph& g, int x, int y, const OracleBudget& budget = {});

bool is_even_pair_exact(const Graph& g, int x, int y, const OracleBudget& budget = {});
bool is_special_even_pair_exact(const Graph& g, int x, int y, const OracleBudget& budget = {});

int chromatic_number_exact(const Graph& g, const OracleBudget& budget = {});
int max_clique_exact(const Graph& g, const OracleBudget& budget = {});

/// Definition check: T nonempty, co-connected, C(T) not a clique.
bool is_interesting_exact(const Graph& g, const VertexSet& t);

/// T is interesting and no strict superset of T is, by enumeration of
/// supersets (pruned only where C(T') is already a clique).
bool brute_maximal_interesting_check(const Graph& g, const VertexSet& t, const OracleBudget& budget = {});

/// Every T-outer path, each once with x < y.
std::vector<std::vector<int>> enumerate_outer_paths(const Graph& g, const VertexSet& t,
                                                    const OracleBudget& budget = {});

/// Whether some component R of V \ (T ∪ C) has N(R) ∩ C not a clique.
bool outer_path_criterion(const Graph& g, const VertexSet& t, const VertexSet& c);

/// P is a T-outer path of even length >= 4 (c must equal C(T)), and no
/// T-outer path has interior strictly inside P's interior.
bool brute_minimal_outer_path_check(const Graph& g, const VertexSet& t, const VertexSet& c,
                                    const std::vector<int>& path, const OracleBudget& budget = {});

/// chi and omega are unchanged by contracting {x, y}.
bool fonlupt_uhry_check(const Graph& g, int x, int y, const OracleBudget& budget = {});

}  // namespace artemis::oracles
