#include "artemis/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "artemis/error.hpp"

namespace artemis::oracles {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

void require(const Graph& g, int cap, const char* who) {
  if (g.n() > cap || g.n() > 64)
    throw BudgetExceeded(std::string(who) + ": n=" + std::to_string(g.n()) + " exceeds oracle budget " +
                         std::to_string(std::min(cap, 64)));
}

std::vector<Mask> masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= bit(v);
  return adj;
}

std::vector<Mask> complement_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  std::vector<Mask> out(adj.size());
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = all & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
  return out;
}

template <class F>
void for_bits(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  s.for_each([&](int v) { m |= bit(v); });
  return m;
}

bool mask_is_clique(const std::vector<Mask>& adj, Mask s) {
  bool ok = true;
  for_bits(s, [&](int v) { ok = ok && (s & ~bit(v) & ~adj[static_cast<std::size_t>(v)]) == 0; });
  return ok;
}

bool mask_connected(const std::vector<Mask>& adj, Mask s) {
  if (!s) return true;
  Mask seen = s & -s;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_bits(frontier, [&](int v) { next |= adj[static_cast<std::size_t>(v)]; });
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// Chordless cycles through their smallest vertex, grown as chordless paths.
// Returns the first cycle whose length satisfies `accept`.
std::vector<int> find_hole(const std::vector<Mask>& adj, const std::function<bool(int)>& accept) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> path;
  std::vector<int> found;

  std::function<bool(Mask)> extend = [&](Mask in_path) -> bool {
    const int s = path.front();
    const int last = path.back();
    const Mask interior = in_path & ~bit(s) & ~bit(last);
    Mask cand = adj[static_cast<std::size_t>(last)] & ~in_path & ~((bit(s) << 1) - 1);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      const Mask aw = adj[static_cast<std::size_t>(w)];
      if (aw & interior) continue;
      if (path.size() >= 2 && (aw & bit(s))) {
        // closes the cycle s .. last w s
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= 4 && accept(len)) {
          found = path;
          found.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      if (extend(in_path | bit(w))) return true;
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    if (extend(bit(s))) return found;
  }
  return {};
}

bool cycle_is_induced(const std::vector<Mask>& adj, const std::vector<int>& cyc) {
  const std::size_t k = cyc.size();
  Mask all = 0;
  for (int v : cyc) all |= bit(v);
  if (static_cast<std::size_t>(std::popcount(all)) != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Mask expect = bit(cyc[(i + 1) % k]) | bit(cyc[(i + k - 1) % k]);
    if ((adj[static_cast<std::size_t>(cyc[i])] & all) != expect) return false;
  }
  return true;
}

bool mask_induces_prism(const std::vector<Mask>& adj, Mask s) {
  if (std::popcount(s) < 6) return false;
  Mask deg3 = 0;
  bool degrees_ok = true;
  for_bits(s, [&](int v) {
    const int d = std::popcount(adj[static_cast<std::size_t>(v)] & s);
    if (d == 3) deg3 |= bit(v);
    else if (d != 2) degrees_ok = false;
  });
  if (!degrees_ok || std::popcount(deg3) != 6) return false;

  std::vector<int> d3;
  for_bits(deg3, [&](int v) { d3.push_back(v); });
  auto triangle = [&](Mask t) { return mask_is_clique(adj, t); };

  // Split the six degree-3 vertices into two triangles (d3[0] in the first).
  for (int i = 1; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const Mask t1 = bit(d3[0]) | bit(d3[static_cast<std::size_t>(i)]) | bit(d3[static_cast<std::size_t>(j)]);
      const Mask t2 = deg3 & ~t1;
      if (!triangle(t1) || !triangle(t2)) continue;
      // Without the triangle edges, every path from t1 must end in t2 and the
      // three paths must cover s.
      auto rest = [&](int v) {
        Mask a = adj[static_cast<std::size_t>(v)] & s;
        if (t1 & bit(v)) a &= ~t1;
        if (t2 & bit(v)) a &= ~t2;
        return a;
      };
      Mask covered = 0;
      Mask ends = 0;
      bool ok = true;
      for_bits(t1, [&](int start) {
        if (!ok) return;
        int prev = -1;
        int cur = start;
        covered |= bit(cur);
        while (true) {
          Mask nxt = rest(cur) & ~(prev >= 0 ? bit(prev) : 0);
          if (std::popcount(nxt) != 1) {
            ok = false;
            return;
          }
          prev = cur;
          cur = std::countr_zero(nxt);
          if (covered & bit(cur)) {
            ok = false;
            return;
          }
          covered |= bit(cur);
          if (t2 & bit(cur)) break;
          if (t1 & bit(cur)) {
            ok = false;
            return;
          }
        }
        ends |= bit(cur);
      });
      if (ok && ends == t2 && covered == s) return true;
    }
  return false;
}

}  // namespace

std::string_view kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::None: return "none";
    case StructureKind::OddHole: return "odd-hole";
    case StructureKind::Antihole: return "antihole";
    case StructureKind::Prism: return "prism";
  }
  return "unknown";
}

StructureWitness find_odd_hole(const Graph& g, const OracleBudget& budget) {
  require(g, budget.max_n, "find_odd_hole");
  auto cyc = find_hole(masks(g), [](int len) { return len >= 5 && len % 2 == 1; });
  if (cyc.empty()) return {};
  return {StructureKind::OddHole, std::move(cyc)};
}

StructureWitness find_antihole(const Graph& g, const OracleBudget& budget) {
  require(g, budget.max_n, "find_antihole");
  auto cyc = find_hole(complement_masks(masks(g)), [](int len) { return len >= 6; });
  if (cyc.empty()) return {};
  return {StructureKind::Antihole, std::move(cyc)};
}

StructureWitness find_prism(const Graph& g, const OracleBudget& budget) {
  require(g, budget.max_n, "find_prism");
  const auto adj = masks(g);
  const int n = g.n();
  if (n < 6) return {};
  const Mask limit = bit(n);
  for (Mask s = 0; s < limit; ++s) {
    if (std::popcount(s) < 6) continue;
    if (mask_induces_prism(adj, s)) {
      StructureWitness w{StructureKind::Prism, {}};
      for_bits(s, [&](int v) { w.vertices.push_back(v); });
      return w;
    }
  }
  return {};
}

ArtemisVerdict is_artemis(const Graph& g, const OracleBudget& budget) {
  if (auto w = find_odd_hole(g, budget)) return {false, std::move(w)};
  if (auto w = find_antihole(g, budget)) return {false, std::move(w)};
  if (auto w = find_prism(g, budget)) return {false, std::move(w)};
  return {};
}

bool induces_prism(const Graph& g, std::uint64_t mask) {
  require(g, 64, "induces_prism");
  return mask_induces_prism(masks(g), mask);
}

bool verify_witness(const Graph& g, const StructureWitness& w) {
  if (g.n() > 64) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= g.n()) return false;
  const auto adj = masks(g);
  const auto k = w.vertices.size();
  switch (w.kind) {
    case StructureKind::None: return w.vertices.empty();
    case StructureKind::OddHole: return k >= 5 && k % 2 == 1 && cycle_is_induced(adj, w.vertices);
    case StructureKind::Antihole: return k >= 5 && cycle_is_induced(complement_masks(adj), w.vertices);
    case StructureKind::Prism: {
      Mask s = 0;
      for (int v : w.vertices) s |= bit(v);
      return static_cast<std::size_t>(std::popcount(s)) == k && mask_induces_prism(adj, s);
    }
  }
  return false;
}

std::vector<std::vector<int>> enumerate_chordless_paths(const Graph& g, int x, int y, const OracleBudget& budget) {
  require(g, budget.max_n, "enumerate_chordless_paths");
  if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
    throw std::invalid_argument("enumerate_chordless_paths: need two distinct vertices");
  const auto adj = masks(g);
  std::vector<std::vector<int>> out;
  std::vector<int> path{x};

  std::function<void(Mask)> extend = [&](Mask in_path) {
    const int last = path.back();
    const Mask earlier = in_path & ~bit(last);
    Mask cand = adj[static_cast<std::size_t>(last)] & ~in_path;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (adj[static_cast<std::size_t>(w)] & earlier) continue;
      path.push_back(w);
      if (w == y) {
        if (out.size() >= budget.max_paths)
          throw BudgetExceeded("enumerate_chordless_paths: more than " + std::to_string(budget.max_paths) + " paths");
        out.push_back(path);
      } else {
        extend(in_path | bit(w));
      }
      path.pop_back();
    }
  };
  extend(bit(x));
  return out;
}

bool is_even_pair_exact(const Graph& g, int x, int y, const OracleBudget& budget) {
  if (x == y || g.adjacent(x, y)) throw std::invalid_argument("is_even_pair_exact: pair must be non-adjacent and distinct");
  for (const auto& p : enumerate_chordless_paths(g, x, y, budget))
    if ((p.size() - 1) % 2 != 0) return false;
  return true;
}

bool is_special_even_pair_exact(const Graph& g, int x, int y, const OracleBudget& budget) {
  if (!is_even_pair_exact(g, x, y, budget)) return false;
  return !find_prism(contract(g, x, y).first, budget);
}

int max_clique_exact(const Graph& g, const OracleBudget& budget) {
  require(g, budget.max_n_exact, "max_clique_exact");
  const auto adj = masks(g);
  int best = 0;
  std::function<void(int, Mask)> expand = [&](int size, Mask cand) {
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(size + 1, cand & adj[static_cast<std::size_t>(v)]);
    }
    best = std::max(best, size);
  };
  const int n = g.n();
  expand(0, n == 64 ? ~Mask{0} : bit(n) - 1);
  return best;
}

int chromatic_number_exact(const Graph& g, const OracleBudget& budget) {
  require(g, budget.max_n_exact, "chromatic_number_exact");
  const int n = g.n();
  if (n == 0) return 0;
  const auto adj = masks(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<Mask> class_of;  // colour classes
  std::function<bool(std::size_t, int)> place = [&](std::size_t i, int k) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    const std::size_t used = class_of.size();
    for (std::size_t c = 0; c < used; ++c) {
      if (class_of[c] & adj[static_cast<std::size_t>(v)]) continue;
      class_of[c] |= bit(v);
      if (place(i + 1, k)) return true;
      class_of[c] &= ~bit(v);
    }
    // open one new class; symmetric choices beyond it are equivalent
    if (static_cast<int>(used) < k) {
      class_of.push_back(bit(v));
      if (place(i + 1, k)) return true;
      class_of.pop_back();
    }
    return false;
  };
  for (int k = std::max(1, max_clique_exact(g, budget));; ++k) {
    class_of.clear();
    if (place(0, k)) return k;
  }
}

bool is_interesting_exact(const Graph& g, const VertexSet& t) {
  if (t.empty() || g.n() > 64) return false;
  const auto adj = masks(g);
  const Mask tm = to_mask(t);
  if (!mask_connected(complement_masks(adj), tm)) return false;
  Mask c = g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1;
  for_bits(tm, [&](int v) { c &= adj[static_cast<std::size_t>(v)]; });
  c &= ~tm;
  return !mask_is_clique(adj, c);
}

bool brute_maximal_interesting_check(const Graph& g, const VertexSet& t, const OracleBudget& budget) {
  require(g, budget.max_n, "brute_maximal_interesting_check");
  if (!is_interesting_exact(g, t)) return false;
  const auto adj = masks(g);
  const auto co = complement_masks(adj);
  const int n = g.n();
  const Mask tm = to_mask(t);
  Mask ct = n == 64 ? ~Mask{0} : bit(n) - 1;
  for_bits(tm, [&](int v) { ct &= adj[static_cast<std::size_t>(v)]; });
  ct &= ~tm;

  // Supersets T ∪ X, X grown in ascending order. C(T ∪ X) only shrinks as X
  // grows, so once it is a clique no extension can be interesting.
  std::function<bool(Mask, Mask, int)> any_larger = [&](Mask x, Mask c, int from) -> bool {
    for (int v = from; v < n; ++v) {
      if (tm & bit(v)) continue;
      const Mask nx = x | bit(v);
      const Mask nc = c & adj[static_cast<std::size_t>(v)] & ~bit(v);
      if (mask_is_clique(adj, nc)) continue;
      if (mask_connected(co, tm | nx)) return true;
      if (any_larger(nx, nc, v + 1)) return true;
    }
    return false;
  };
  return !any_larger(0, ct, 0);
}

std::vector<std::vector<int>> enumerate_outer_paths(const Graph& g, const VertexSet& t, const OracleBudget& budget) {
  require(g, budget.max_n, "enumerate_outer_paths");
  const auto adj = masks(g);
  const Mask tm = to_mask(t);
  const Mask cm = to_mask(common_complete(g, t));
  const Mask outside = (g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1) & ~tm & ~cm;
  std::vector<std::vector<int>> out;
  std::vector<int> path;

  std::function<void(Mask)> extend = [&](Mask in_path) {
    const int x = path.front();
    const int last = path.back();
    const Mask earlier = in_path & ~bit(last);
    Mask cand = adj[static_cast<std::size_t>(last)] & ~in_path & (outside | cm);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (adj[static_cast<std::size_t>(w)] & earlier) continue;
      if (cm & bit(w)) {
        if (path.size() >= 2 && w > x) {
          if (out.size() >= budget.max_paths) throw BudgetExceeded("enumerate_outer_paths: path cap reached");
          out.push_back(path);
          out.back().push_back(w);
        }
        continue;
      }
      path.push_back(w);
      extend(in_path | bit(w));
      path.pop_back();
    }
  };
  for_bits(cm, [&](int x) {
    path.assign(1, x);
    extend(bit(x));
  });
  return out;
}

bool outer_path_criterion(const Graph& g, const VertexSet& t, const VertexSet& c) {
  const VertexSet outside = VertexSet::full(g.n()) - t - c;
  for (const VertexSet& r : components(g, outside)) {
    VertexSet nr(g.n());
    r.for_each([&](int v) {
      for (int w : g.neighbors(v))
        if (c.contains(w)) nr.insert(w);
    });
    if (!is_clique(g, nr)) return true;
  }
  return false;
}

bool brute_minimal_outer_path_check(const Graph& g, const VertexSet& t, const VertexSet& c,
                                    const std::vector<int>& path, const OracleBudget& budget) {
  require(g, budget.max_n, "brute_minimal_outer_path_check");
  if (!(c == common_complete(g, t))) return false;
  if (path.size() < 3) return false;
  const auto adj = masks(g);
  const Mask tm = to_mask(t);
  const Mask cm = to_mask(c);
  Mask all = 0;
  for (int v : path) {
    if (v < 0 || v >= g.n() || (all & bit(v))) return false;
    all |= bit(v);
  }
  const std::size_t k = path.size();
  // chordless: each vertex sees exactly its path neighbours inside the path
  for (std::size_t i = 0; i < k; ++i) {
    Mask expect = 0;
    if (i > 0) expect |= bit(path[i - 1]);
    if (i + 1 < k) expect |= bit(path[i + 1]);
    if ((adj[static_cast<std::size_t>(path[i])] & all) != expect) return false;
  }
  if (!(cm & bit(path.front())) || !(cm & bit(path.back()))) return false;
  Mask interior = 0;
  for (std::size_t i = 1; i + 1 < k; ++i) interior |= bit(path[i]);
  if (interior & (tm | cm)) return false;
  const std::size_t length = k - 1;
  if (length % 2 != 0 || length < 4) return false;

  for (const auto& q : enumerate_outer_paths(g, t, budget)) {
    Mask qi = 0;
    for (std::size_t i = 1; i + 1 < q.size(); ++i) qi |= bit(q[i]);
    if (qi != interior && (qi & ~interior) == 0) return false;
  }
  return true;
}

bool fonlupt_uhry_check(const Graph& g, int x, int y, const OracleBudget& budget) {
  const Graph h = contract(g, x, y).first;
  return chromatic_number_exact(g, budget) == chromatic_number_exact(h, budget) &&
         max_clique_exact(g, budget) == max_clique_exact(h, budget);
}

}  // namespace artemis::oracles
