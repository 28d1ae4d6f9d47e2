#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "artemis/graph.hpp"
#include "artemis/oracles.hpp"

namespace artemis::gen {

enum class Family { Chordal, Bipartite, FilteredRandom };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Deterministic for a fixed (family, n, density, seed).
///
///  chordal          intersection graph of random subtrees of a random host
///                   tree on n nodes; each subtree has about
///                   density * 2 * (n - 1) nodes on average (at least one).
///  bipartite        random bipartition, each cross pair an edge with
///                   probability `density`.
///  filtered-random  G(n, density) resampled until it has no odd hole, no
///                   antihole and no prism. Requires n within the oracle
///                   budget; throws BudgetExceeded otherwise.
Graph generate(Family family, int n, double density, std::uint64_t seed,
               const oracles::OracleBudget& budget = {});

}  // namespace artemis::gen
