#pragma once

// Generalized handles, and checks tying them to maximal interesting sets of
// the complement. Used to cross-validate the engine; the colouring pipeline
// never goes through here.

#include <optional>
#include <stdexcept>

#include "artemis/graph.hpp"
#include "artemis/oracles.hpp"
#include "artemis/vertex_set.hpp"

namespace artemis::handles {

struct GeneralizedHandle {
  VertexSet h;
  /// Co-handle: a component of G \ N(H) other than H with N(J) = N(H).
  VertexSet j;
  /// N(H) = N(J).
  VertexSet boundary;
  /// Whether G[H] is connected, i.e. whether this is a handle proper.
  bool h_connected = false;
  /// Loop iterations after the initial choice.
  int iterations = 0;
};

/// The search loop exceeded n^2 iterations.
class HandleLoopCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Starts from the smallest vertex v missing some edge e (smallest such edge),
/// sets J to the component of G \ N(e) containing v and H to V \ (J ∪ N(J)),
/// and repeats from the smallest v in N(H) missing an edge of G[H] until no
/// such pair exists. Returns nullopt when no vertex misses any edge.
std::optional<GeneralizedHandle> find_generalized_handle(const Graph& g);

/// Definition check for a generalized handle with co-handle J.
bool is_generalized_handle(const Graph& g, const VertexSet& h, const VertexSet& j);

/// Generalized handle with G[H] connected and |H| >= 2.
bool is_handle(const Graph& g, const VertexSet& h, const VertexSet& j);

/// J is a maximal interesting set of the complement of g.
bool cohandle_is_max_interesting(const Graph& g, const GeneralizedHandle& handle,
                                 const oracles::OracleBudget& budget = {});

/// For every co-connected component H of G[C(T)] with |H| >= 2, H is a
/// handle of the complement with co-handle T. Requires T maximal interesting.
bool interesting_gives_handle_check(const Graph& g, const VertexSet& t, const oracles::OracleBudget& budget = {});

}  // namespace artemis::handles
