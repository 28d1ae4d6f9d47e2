#include "artemis/handles.hpp"

#include <string>

#include "artemis/error.hpp"

namespace artemis::handles {
namespace {

// N(S): vertices outside S with a neighbour in S.
VertexSet boundary_of(const Graph& g, const VertexSet& s) {
  VertexSet out(g.n());
  s.for_each([&](int v) {
    for (int w : g.neighbors(v)) out.insert(w);
  });
  return out - s;
}

// v sees neither endpoint of e.
bool misses(const Graph& g, int v, const Edge& e) {
  return v != e.first && v != e.second && !g.adjacent(v, e.first) && !g.adjacent(v, e.second);
}

// Smallest edge (lexicographic) of G[s] missed by v.
std::optional<Edge> missed_edge(const Graph& g, int v, const VertexSet& s) {
  for (int a = s.first(); a >= 0; a = s.next(a + 1))
    for (int b : g.neighbors(a))
      if (b > a && s.contains(b) && misses(g, v, {a, b})) return Edge{a, b};
  return std::nullopt;
}

VertexSet component_containing(const Graph& g, const VertexSet& allowed, int v) {
  for (VertexSet& comp : components(g, allowed))
    if (comp.contains(v)) return std::move(comp);
  return VertexSet(g.n());
}

// J := component of G \ N(e) containing v; H := V \ (J ∪ N(J)).
void rebuild(const Graph& g, int v, const Edge& e, GeneralizedHandle& out) {
  VertexSet ends(g.n(), {e.first, e.second});
  const VertexSet ne = boundary_of(g, ends);
  out.j = component_containing(g, VertexSet::full(g.n()) - ne, v);
  const VertexSet nj = boundary_of(g, out.j);
  out.h = VertexSet::full(g.n()) - out.j - nj;
  out.boundary = nj;
}

bool has_edge(const Graph& g, const VertexSet& s) {
  bool found = false;
  s.for_each([&](int v) {
    if (!found && g.neighbor_set(v).intersects(s)) found = true;
  });
  return found;
}

}  // namespace

std::optional<GeneralizedHandle> find_generalized_handle(const Graph& g) {
  const int n = g.n();
  const VertexSet all = VertexSet::full(n);
  GeneralizedHandle out;
  bool started = false;
  for (int v = 0; v < n && !started; ++v)
    if (auto e = missed_edge(g, v, all)) {
      rebuild(g, v, *e, out);
      started = true;
    }
  if (!started) return std::nullopt;

  const long long cap = static_cast<long long>(n) * n;
  while (true) {
    bool moved = false;
    for (int v = out.boundary.first(); v >= 0; v = out.boundary.next(v + 1))
      if (auto e = missed_edge(g, v, out.h)) {
        if (++out.iterations > cap)
          throw HandleLoopCapExceeded("generalized-handle loop exceeded " + std::to_string(cap) + " iterations");
        rebuild(g, v, *e, out);
        moved = true;
        break;
      }
    if (!moved) break;
  }
  out.h_connected = components(g, out.h).size() == 1;
  return out;
}

bool is_generalized_handle(const Graph& g, const VertexSet& h, const VertexSet& j) {
  if (h.empty() || j.empty() || h == j || h.intersects(j)) return false;
  if (h.size() == static_cast<std::size_t>(g.n())) return false;  // H must be a proper subset
  if (!has_edge(g, h)) return false;
  const VertexSet nh = boundary_of(g, h);
  if (j.intersects(nh)) return false;
  // J must be a whole component of G \ N(H).
  bool is_component = false;
  for (const VertexSet& comp : components(g, VertexSet::full(g.n()) - nh))
    if (comp == j) is_component = true;
  if (!is_component) return false;
  if (!(boundary_of(g, j) == nh)) return false;
  bool sees_all = true;
  nh.for_each([&](int v) {
    if (sees_all && missed_edge(g, v, h)) sees_all = false;
  });
  return sees_all;
}

bool is_handle(const Graph& g, const VertexSet& h, const VertexSet& j) {
  return h.size() >= 2 && components(g, h).size() == 1 && is_generalized_handle(g, h, j);
}

bool cohandle_is_max_interesting(const Graph& g, const GeneralizedHandle& handle,
                                 const oracles::OracleBudget& budget) {
  return oracles::brute_maximal_interesting_check(complement(g), handle.j, budget);
}

bool interesting_gives_handle_check(const Graph& g, const VertexSet& t, const oracles::OracleBudget& budget) {
  if (g.n() > budget.max_n)
    throw BudgetExceeded("interesting_gives_handle_check: n=" + std::to_string(g.n()) + " exceeds budget");
  const VertexSet c = common_complete(g, t);
  const Graph co = complement(g);
  bool any = false;
  for (const VertexSet& h : components(co, c)) {
    if (h.size() < 2) continue;
    any = true;
    if (!is_handle(co, h, t)) return false;
  }
  if (!any) throw std::logic_error("interesting_gives_handle_check: C(T) has no co-component of size >= 2");
  return true;
}

}  // namespace artemis::handles
