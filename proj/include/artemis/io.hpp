#pragma once

#include <string>
#include <string_view>

#include "artemis/engine.hpp"
#include "artemis/graph.hpp"

namespace artemis::io {

struct DimacsGraph {
  Graph graph;
  int duplicate_edges = 0;
  /// Declared edge count on the `p` line (the parsed count wins on mismatch).
  long long declared_edges = 0;
  bool edge_count_mismatch = false;
};

/// DIMACS .col: `c` comments, one `p edge <n> <m>` line, then `e <u> <v>`
/// lines with 1-based endpoints. Throws ParseError with the offending line.
DimacsGraph parse_dimacs(std::string_view text);

std::string write_dimacs(const Graph& g);

/// `s <num_colors>` followed by `v <vertex> <colour>` per vertex, 1-based.
std::string write_coloring(const Coloring& c);

/// Contraction steps (a, b, merged, chain depth, vertex map), the residue
/// partition and the colour count, as pretty-printed JSON.
std::string trace_json(const ArtemisColoring& result);

}  // namespace artemis::io
