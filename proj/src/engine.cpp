#include "artemis/engine.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "artemis/error.hpp"

namespace artemis {

OpCounters& OpCounters::operator+=(const OpCounters& o) {
  interesting += o.interesting;
  outer_path += o.outer_path;
  even_pair += o.even_pair;
  chain += o.chain;
  contraction += o.contraction;
  return *this;
}

namespace {

// Membership marks with O(1) reset.
class StampSet {
 public:
  explicit StampSet(int n) : stamp_(static_cast<std::size_t>(n), 0) {}
  void reset() { ++epoch_; }
  void insert(int v) { stamp_[idx(v)] = epoch_; }
  bool contains(int v) const { return stamp_[idx(v)] == epoch_; }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

// Per-vertex counters with O(1) reset.
class StampCounter {
 public:
  explicit StampCounter(int n) : value_(static_cast<std::size_t>(n), 0), stamp_(static_cast<std::size_t>(n), 0) {}
  void reset() { ++epoch_; }
  int get(int v) const { return stamp_[idx(v)] == epoch_ ? value_[idx(v)] : 0; }
  void increment(int v) {
    if (stamp_[idx(v)] != epoch_) {
      stamp_[idx(v)] = epoch_;
      value_[idx(v)] = 0;
    }
    ++value_[idx(v)];
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  std::vector<int> value_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

// Visited marks and parent links for repeated breadth-first searches.
class Search {
 public:
  explicit Search(int n) : seen_(n), parent_(static_cast<std::size_t>(n), -1) {}

  /// Plain BFS in which only vertices satisfying in_domain are discovered and
  /// targets are never expanded. on_discover(w, is_target) returning true
  /// aborts the search; the function then returns true.
  template <class InDomain, class IsTarget, class OnDiscover>
  bool run(const Graph& g, std::span<const int> roots, std::uint64_t& ops, InDomain&& in_domain,
           IsTarget&& is_target, OnDiscover&& on_discover) {
    seen_.reset();
    queue_.clear();
    for (int r : roots) {
      seen_.insert(r);
      parent_[static_cast<std::size_t>(r)] = -1;
      queue_.push_back(r);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int u = queue_[head];
      ++ops;
      for (int w : g.neighbors(u)) {
        ++ops;
        if (seen_.contains(w) || !in_domain(w)) continue;
        seen_.insert(w);
        parent_[static_cast<std::size_t>(w)] = u;
        const bool target = is_target(w);
        if (on_discover(w, target)) return true;
        if (!target) queue_.push_back(w);
      }
    }
    return false;
  }

  bool seen(int v) const { return seen_.contains(v); }

  std::vector<int> path_to(int v) const {
    std::vector<int> path;
    for (int u = v; u >= 0; u = parent_[static_cast<std::size_t>(u)]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  StampSet seen_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

struct InterestingOutcome {
  InterestingSetResult result;
  std::int64_t level_edges = 0;
};

InterestingOutcome find_interesting_in(const Graph& g, const VertexSet& dom, std::uint64_t& ops) {
  const int n = g.n();
  InterestingOutcome out;

  // Step 1: components of G[dom] and degrees inside dom.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> comp_size;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::int64_t degree_sum = 0;
  dom.for_each([&](int root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) return;
    const int id = static_cast<int>(comp_size.size());
    comp_size.push_back(0);
    comp[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++ops;
      ++comp_size.back();
      for (int w : g.neighbors(u)) {
        ++ops;
        if (!dom.contains(w)) continue;
        ++deg[static_cast<std::size_t>(u)];
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  });

  int start = -1;
  dom.for_each([&](int v) {
    degree_sum += deg[static_cast<std::size_t>(v)];
    if (start < 0 && deg[static_cast<std::size_t>(v)] < comp_size[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] - 1)
      start = v;
  });
  out.level_edges = degree_sum / 2;

  if (start < 0) {
    DisjointCliques parts;
    parts.cliques.resize(comp_size.size());
    dom.for_each([&](int v) { parts.cliques[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v); });
    out.result = std::move(parts);
    return out;
  }

  // BFS from `start` to depth two; t is the parent of the smallest vertex at
  // distance two. Neighbour lists are ascending, so the parent is the
  // smallest distance-one neighbour.
  StampSet near(n);
  near.insert(start);
  std::vector<int> level1;
  for (int w : g.neighbors(start)) {
    ++ops;
    if (dom.contains(w)) {
      near.insert(w);
      level1.push_back(w);
    }
  }
  int v2 = -1;
  int t = -1;
  for (int u : level1) {
    ++ops;
    for (int w : g.neighbors(u)) {
      ++ops;
      if (!dom.contains(w) || near.contains(w)) continue;
      if (v2 < 0 || w < v2) {
        v2 = w;
        t = u;
      }
    }
  }
  if (t < 0) throw std::logic_error("find_interesting: non-simplicial vertex without a vertex at distance 2");

  // Step 2: grow T from {t}. C stays equal to C(T) within dom and never
  // becomes a clique.
  VertexSet tset(n);
  tset.insert(t);
  VertexSet cset(n);
  for (int w : g.neighbors(t)) {
    ++ops;
    if (dom.contains(w)) cset.insert(w);
  }
  VertexSet uset = dom - tset - cset;

  StampSet in_w(n);
  StampSet nbr_u(n);
  std::vector<int> w_list;
  for (int u = uset.first(); u >= 0; u = uset.first()) {
    uset.erase(u);
    w_list.clear();
    in_w.reset();
    for (int w : g.neighbors(u)) {
      ++ops;
      if (cset.contains(w)) {
        w_list.push_back(w);
        in_w.insert(w);
      }
    }
    bool clique = true;
    for (int w : w_list) {
      std::size_t inside = 0;
      for (int z : g.neighbors(w)) {
        ++ops;
        if (in_w.contains(z)) ++inside;
      }
      if (inside + 1 != w_list.size()) {
        clique = false;
        break;
      }
    }
    if (clique) continue;  // u moves to Z

    tset.insert(u);
    nbr_u.reset();
    for (int w : g.neighbors(u)) {
      ++ops;
      nbr_u.insert(w);
    }
    for (int c = cset.first(); c >= 0; c = cset.next(c + 1)) {
      ++ops;
      if (!nbr_u.contains(c)) {
        cset.erase(c);
        uset.insert(c);
      }
    }
  }
  out.result = MaximalInteresting{std::move(tset), std::move(cset)};
  return out;
}

struct OuterOutcome {
  std::optional<OuterPath> path;
  int components = 0;
};

OuterOutcome find_outer_path_in(const Graph& g, const VertexSet& dom, const VertexSet& t, const VertexSet& c,
                                std::uint64_t& ops) {
  const int n = g.n();
  OuterOutcome out;
  const VertexSet search_dom = dom - t;
  const VertexSet outside = search_dom - c;
  VertexSet marked(n);

  Search first(n);
  Search second(n);
  StampCounter m_neighbors(n);  // for u in C: |N(u) ∩ M|
  StampSet in_m(n);
  StampSet in_mx(n);
  std::vector<int> m_list;

  for (int r = outside.first(); r >= 0; r = outside.next(r + 1)) {
    if (marked.contains(r)) continue;
    ++out.components;
    m_neighbors.reset();
    in_m.reset();
    m_list.clear();
    marked.insert(r);
    int trigger = -1;
    const int roots[] = {r};
    first.run(
        g, roots, ops, [&](int w) { return search_dom.contains(w); }, [&](int w) { return c.contains(w); },
        [&](int w, bool target) {
          if (!target) {
            marked.insert(w);
            return false;
          }
          if (static_cast<std::size_t>(m_neighbors.get(w)) != m_list.size()) {
            trigger = w;
            return true;
          }
          m_list.push_back(w);
          in_m.insert(w);
          for (int z : g.neighbors(w)) {
            ++ops;
            if (c.contains(z)) m_neighbors.increment(z);
          }
          return false;
        });
    if (trigger < 0) continue;

    // M ∪ {x} is not a clique. Search from x in G[S \ M_x] for the first
    // vertex of M \ M_x.
    const int x = trigger;
    in_mx.reset();
    for (int z : g.neighbors(x)) {
      ++ops;
      if (in_m.contains(z)) in_mx.insert(z);
    }
    int y = -1;
    const int xroot[] = {x};
    second.run(
        g, xroot, ops, [&](int w) { return first.seen(w) && !in_mx.contains(w); },
        [&](int w) { return in_m.contains(w); },
        [&](int w, bool target) {
          if (target) y = w;
          return target;
        });
    if (y < 0)
      throw NotArtemisError("outer-path search: no vertex of M \\ M_x reachable from the trigger vertex " +
                            std::to_string(x));
    out.path = OuterPath{second.path_to(y)};
    return out;
  }
  return out;
}

EvenPairState find_even_pair_in(const Graph& g, const VertexSet& dom, const VertexSet& t, const VertexSet& c,
                                const OuterPath& path, std::uint64_t& ops) {
  const int n = g.n();
  if (path.vertices.size() < 3) throw std::invalid_argument("find_even_pair: outer path needs an interior vertex");
  const int x = path.x();
  const int y = path.y();
  const int v = path.vertices[1];
  const int w = path.vertices[path.vertices.size() - 2];

  EvenPairState st;
  st.a_side = VertexSet(n);
  st.b_side = VertexSet(n);
  st.k = VertexSet(n);
  st.l = VertexSet(n);

  StampSet mark(n);
  auto side = [&](int inner, int far_end, VertexSet& out) {
    mark.reset();
    for (int z : g.neighbors(far_end)) {
      ++ops;
      mark.insert(z);
    }
    for (int z : g.neighbors(inner)) {
      ++ops;
      if (c.contains(z) && !mark.contains(z)) out.insert(z);
    }
  };
  side(v, y, st.a_side);
  side(w, x, st.b_side);
  if (!st.a_side.contains(x) || !st.b_side.contains(y))
    throw NotArtemisError("even-pair search: path endpoints are not in A and B respectively");

  Search search(n);
  StampSet in_side(n);
  StampSet in_nbhd(n);
  StampCounter seen_count(n);

  // Returns the vertices of N(from) reached by a BFS from `to` in
  // G[dom \ (T ∪ from)], and the smallest vertex of `from` adjacent to all of
  // them.
  auto reach = [&](const VertexSet& from, const VertexSet& to, VertexSet& reached, const char* label) {
    in_side.reset();
    from.for_each([&](int u) { in_side.insert(u); });
    in_nbhd.reset();
    from.for_each([&](int u) {
      for (int z : g.neighbors(u)) {
        ++ops;
        if (dom.contains(z) && !in_side.contains(z)) in_nbhd.insert(z);
      }
    });
    const std::vector<int> roots = to.to_vector();
    for (int r : roots)
      if (in_nbhd.contains(r))
        throw NotArtemisError(std::string("even-pair search: ") + label +
                              " has an edge to the opposite side; A and B must be anticomplete");
    std::vector<int> hit;
    search.run(
        g, roots, ops,
        [&](int z) { return dom.contains(z) && !t.contains(z) && !in_side.contains(z); },
        [&](int z) { return in_nbhd.contains(z); },
        [&](int z, bool target) {
          if (target) {
            hit.push_back(z);
            reached.insert(z);
          }
          return false;
        });
    seen_count.reset();
    for (int k : hit)
      for (int z : g.neighbors(k)) {
        ++ops;
        if (in_side.contains(z)) seen_count.increment(z);
      }
    int best = -1;
    for (int u = from.first(); u >= 0; u = from.next(u + 1)) {
      ++ops;
      if (static_cast<std::size_t>(seen_count.get(u)) == hit.size()) {
        best = u;
        break;
      }
    }
    if (best < 0)
      throw NotArtemisError(std::string("even-pair search: no vertex of ") + label +
                            " is complete to the reached part of its neighbourhood (no maximal element)");
    return best;
  };
  st.a = reach(st.a_side, st.b_side, st.k, "A");
  st.b = reach(st.b_side, st.a_side, st.l, "B");
  return st;
}

VertexSet to_top_set(const VertexSet& s, std::span<const int> to_top, int top_n) {
  VertexSet out(top_n);
  s.for_each([&](int v) { out.insert(to_top[static_cast<std::size_t>(v)]); });
  return out;
}

std::uint64_t& slot(std::uint64_t& scratch, const EngineOptions& opts, std::uint64_t OpCounters::*field) {
  return opts.counters ? opts.counters->*field : scratch;
}

}  // namespace

InterestingSetResult find_interesting(const Graph& g, const EngineOptions& opts) {
  if (g.n() < 1) throw std::invalid_argument("find_interesting: empty graph");
  std::uint64_t scratch = 0;
  return find_interesting_in(g, VertexSet::full(g.n()), slot(scratch, opts, &OpCounters::interesting)).result;
}

std::optional<OuterPath> find_outer_path(const Graph& g, const VertexSet& t, const VertexSet& c,
                                         const EngineOptions& opts) {
  std::uint64_t scratch = 0;
  return find_outer_path_in(g, VertexSet::full(g.n()), t, c, slot(scratch, opts, &OpCounters::outer_path)).path;
}

EvenPairState find_even_pair(const Graph& g, const VertexSet& t, const VertexSet& c, const OuterPath& path,
                             const EngineOptions& opts) {
  std::uint64_t scratch = 0;
  return find_even_pair_in(g, VertexSet::full(g.n()), t, c, path, slot(scratch, opts, &OpCounters::even_pair));
}

SpecialPairResult find_special_even_pair(const Graph& g, const EngineOptions& opts) {
  if (g.n() < 1) throw std::invalid_argument("find_special_even_pair: empty graph");
  OpCounters scratch;
  OpCounters& ctr = opts.counters ? *opts.counters : scratch;
  const int top_n = g.n();

  // A level is G'[dom] where G' is either g or a materialised induced copy.
  std::unique_ptr<Graph> owned;
  const Graph* graph = &g;
  VertexSet dom = VertexSet::full(top_n);
  std::vector<int> to_top(static_cast<std::size_t>(top_n));
  std::iota(to_top.begin(), to_top.end(), 0);

  SpecialEvenPair found;
  for (int depth = 1;; ++depth) {
    const LevelView view{*graph, dom, to_top, depth};
    InterestingOutcome io = find_interesting_in(*graph, dom, ctr.interesting);
    if (opts.observer) opts.observer->on_interesting(view, io.result);

    if (auto* parts = std::get_if<DisjointCliques>(&io.result)) {
      if (depth == 1) return std::move(*parts);
      if (parts->cliques.size() < 2)
        throw NotArtemisError("chain: the C set of a maximal interesting set turned out to be a clique");
      const int a = parts->cliques[0].front();
      const int b = parts->cliques[1].front();
      if (opts.observer) opts.observer->on_bottom_pair(view, *parts, a, b);
      found.a = to_top[static_cast<std::size_t>(a)];
      found.b = to_top[static_cast<std::size_t>(b)];
      found.bottom_case = true;
      found.depth = depth;
      return found;
    }

    auto& mi = std::get<MaximalInteresting>(io.result);
    OuterOutcome oo = find_outer_path_in(*graph, dom, mi.t, mi.c, ctr.outer_path);
    if (opts.observer) opts.observer->on_outer_path(view, mi, oo.path);
    found.chain.push_back(ChainLevel{to_top_set(mi.t, to_top, top_n), to_top_set(mi.c, to_top, top_n),
                                     static_cast<int>(dom.size()), io.level_edges, oo.components});

    if (oo.path) {
      EvenPairState ep = find_even_pair_in(*graph, dom, mi.t, mi.c, *oo.path, ctr.even_pair);
      if (opts.observer) opts.observer->on_even_pair(view, mi, *oo.path, ep);
      found.a = to_top[static_cast<std::size_t>(ep.a)];
      found.b = to_top[static_cast<std::size_t>(ep.b)];
      found.depth = depth;
      return found;
    }

    // No outer path: descend into G'[C].
    const std::size_t c_size = mi.c.size();
    if (2 * c_size < dom.size()) {
      mi.c.for_each([&](int v) { ctr.chain += 1 + static_cast<std::uint64_t>(graph->degree(v)); });
      InducedGraph ind = induced(*graph, mi.c);
      std::vector<int> next_to_top(ind.to_parent.size());
      for (std::size_t i = 0; i < ind.to_parent.size(); ++i)
        next_to_top[i] = to_top[static_cast<std::size_t>(ind.to_parent[i])];
      owned = std::make_unique<Graph>(std::move(ind.graph));
      graph = owned.get();
      to_top = std::move(next_to_top);
      dom = VertexSet::full(graph->n());
    } else {
      dom = std::move(mi.c);
    }
  }
}

Coloring greedy_color_cliques(const DisjointCliques& partition) {
  std::size_t n = 0;
  for (const auto& q : partition.cliques) n += q.size();
  Coloring c;
  c.color.assign(n, -1);
  for (const auto& q : partition.cliques) {
    for (std::size_t j = 0; j < q.size(); ++j) c.color[static_cast<std::size_t>(q[j])] = static_cast<int>(j);
    c.num_colors = std::max(c.num_colors, static_cast<int>(q.size()));
  }
  return c;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.color.size() != static_cast<std::size_t>(g.n())) return false;
  for (int col : c.color)
    if (col < 0 || col >= c.num_colors) return false;
  for (auto [u, v] : g.edges())
    if (c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)]) return false;
  return true;
}

Coloring lift_coloring(const ContractionTrace& trace, const Coloring& c) {
  const std::size_t final_n = static_cast<std::size_t>(trace.original_n) - trace.steps.size();
  if (c.color.size() != final_n)
    throw std::invalid_argument("lift_coloring: colouring has " + std::to_string(c.color.size()) +
                                " vertices, trace ends with " + std::to_string(final_n));
  for (int col : c.color)
    if (col < 0 || col >= c.num_colors) throw std::invalid_argument("lift_coloring: colour index out of range");
  Coloring cur = c;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    std::vector<int> prev(it->vertex_map.size());
    for (std::size_t v = 0; v < prev.size(); ++v)
      prev[v] = cur.color[static_cast<std::size_t>(it->vertex_map[v])];
    cur.color = std::move(prev);
  }
  return cur;
}

Coloring lift_coloring(const ContractionTrace& trace, const Coloring& c, const Graph& final_graph) {
  if (!is_proper(final_graph, c)) throw std::invalid_argument("lift_coloring: colouring is not proper on the final graph");
  return lift_coloring(trace, c);
}

ArtemisColoring color_artemis(const Graph& g, const EngineOptions& opts) {
  OpCounters scratch;
  EngineOptions inner = opts;
  if (!inner.counters) inner.counters = &scratch;

  ArtemisColoring out;
  out.trace.original_n = g.n();
  if (g.n() == 0) return out;

  Graph cur = g;
  while (true) {
    SpecialPairResult r = find_special_even_pair(cur, inner);
    if (auto* parts = std::get_if<DisjointCliques>(&r)) {
      out.residue = std::move(*parts);
      break;
    }
    const auto& pair = std::get<SpecialEvenPair>(r);
    if (cur.adjacent(pair.a, pair.b))
      throw NotArtemisError("driver: selected pair " + std::to_string(pair.a) + "," + std::to_string(pair.b) +
                            " is adjacent");
    inner.counters->contraction += static_cast<std::uint64_t>(cur.n()) + 2 * static_cast<std::uint64_t>(cur.m());
    auto [next, step] = contract(cur, pair.a, pair.b);
    step.chain_depth = pair.depth;
    if (opts.observer) opts.observer->on_contraction(cur, step, next);
    out.trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  out.coloring = lift_coloring(out.trace, greedy_color_cliques(out.residue));
  return out;
}

}  // namespace artemis
