#include "artemis/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "artemis/handles.hpp"

namespace artemis::verify {
namespace {

constexpr std::size_t kMaxStoredFailures = 50;

struct Local {
  InducedGraph ind;
  std::vector<int> to_local;

  VertexSet map(const VertexSet& s) const {
    VertexSet out(ind.graph.n());
    s.for_each([&](int v) { out.insert(to_local[static_cast<std::size_t>(v)]); });
    return out;
  }
  int map(int v) const { return to_local[static_cast<std::size_t>(v)]; }
};

Local materialize(const LevelView& view) {
  Local l{induced(view.graph, view.domain), std::vector<int>(static_cast<std::size_t>(view.graph.n()), -1)};
  for (std::size_t i = 0; i < l.ind.to_parent.size(); ++i) l.to_local[static_cast<std::size_t>(l.ind.to_parent[i])] = static_cast<int>(i);
  return l;
}

std::string describe(const LevelView& view) {
  std::ostringstream os;
  os << "level " << view.depth << " (n=" << view.domain.size() << ")";
  return os.str();
}

}  // namespace

void Verifier::record(const std::string& name, bool pass, const std::string& detail) {
  auto& t = tallies_[name];
  if (pass) {
    ++t.passed;
    return;
  }
  ++t.failed;
  if (failures_.size() < kMaxStoredFailures) failures_.push_back(name + ": " + detail);
}

void Verifier::skip(const std::string& name) { ++tallies_[name].skipped; }

CheckTally Verifier::tally(const std::string& name) const {
  auto it = tallies_.find(name);
  return it == tallies_.end() ? CheckTally{} : it->second;
}

void Verifier::on_interesting(const LevelView& view, const InterestingSetResult& r) {
  const int n = static_cast<int>(view.domain.size());
  if (!within(n)) {
    skip(std::holds_alternative<MaximalInteresting>(r) ? kMaximalInteresting : kDisjointCliques);
    return;
  }
  const Local l = materialize(view);
  if (const auto* mi = std::get_if<MaximalInteresting>(&r)) {
    const VertexSet t = l.map(mi->t);
    const bool c_ok = l.map(mi->c) == common_complete(l.ind.graph, t);
    record(kMaximalInteresting, c_ok && oracles::brute_maximal_interesting_check(l.ind.graph, t, budget_),
           describe(view));
    if (check_handles_) record(kHandleFromInteresting, handles::interesting_gives_handle_check(l.ind.graph, t, budget_), describe(view));
    return;
  }
  const auto& parts = std::get<DisjointCliques>(r);
  bool ok = true;
  for (int v = 0; v < l.ind.graph.n(); ++v) ok = ok && is_simplicial(l.ind.graph, v);
  std::size_t covered = 0;
  for (const auto& q : parts.cliques) covered += q.size();
  ok = ok && covered == static_cast<std::size_t>(n);
  record(kDisjointCliques, ok, describe(view));
}

void Verifier::on_outer_path(const LevelView& view, const MaximalInteresting& mi, const std::optional<OuterPath>& p) {
  const int n = static_cast<int>(view.domain.size());
  const char* name = p ? kMinimalOuterPath : kNoOuterPath;
  if (!within(n)) {
    skip(name);
    return;
  }
  const Local l = materialize(view);
  const VertexSet t = l.map(mi.t);
  const VertexSet c = l.map(mi.c);
  if (p) {
    std::vector<int> path;
    for (int v : p->vertices) path.push_back(l.map(v));
    record(name, oracles::brute_minimal_outer_path_check(l.ind.graph, t, c, path, budget_), describe(view));
  } else {
    record(name,
           !oracles::outer_path_criterion(l.ind.graph, t, c) && oracles::enumerate_outer_paths(l.ind.graph, t, budget_).empty(),
           describe(view));
  }
}

void Verifier::on_even_pair(const LevelView& view, const MaximalInteresting&, const OuterPath& p,
                            const EvenPairState& st) {
  const Graph& g = view.graph;
  bool ok = st.a_side.contains(p.x()) && st.b_side.contains(p.y()) && st.a_side.contains(st.a) &&
            st.b_side.contains(st.b) && is_clique(g, st.a_side) && is_clique(g, st.b_side);
  st.a_side.for_each([&](int u) { ok = ok && !g.neighbor_set(u).intersects(st.b_side); });
  st.k.for_each([&](int k) { ok = ok && g.adjacent(st.a, k); });
  st.l.for_each([&](int l) { ok = ok && g.adjacent(st.b, l); });
  record(kEvenPairSides, ok, describe(view));
}

void Verifier::on_bottom_pair(const LevelView& view, const DisjointCliques&, int a, int b) {
  if (!within(static_cast<int>(view.domain.size()))) {
    skip(kBottomPair);
    return;
  }
  const Local l = materialize(view);
  const int la = l.map(a);
  const int lb = l.map(b);
  record(kBottomPair,
         !l.ind.graph.adjacent(la, lb) && oracles::is_special_even_pair_exact(l.ind.graph, la, lb, budget_),
         describe(view));
}

void Verifier::on_contraction(const Graph& before, const ContractionStep& step, const Graph& after) {
  if (!within(before.n())) {
    for (const char* name : {kEvenPair, kSpecialEvenPair, kFonluptUhry, kClassPreserved}) skip(name);
    return;
  }
  std::ostringstream os;
  os << "pair (" << step.a << "," << step.b << ") on n=" << before.n();
  const bool even = oracles::is_even_pair_exact(before, step.a, step.b, budget_);
  record(kEvenPair, even, os.str());
  record(kSpecialEvenPair, even && !oracles::find_prism(after, budget_), os.str());
  if (before.n() <= budget_.max_n_exact) record(kFonluptUhry, oracles::fonlupt_uhry_check(before, step.a, step.b, budget_), os.str());
  else skip(kFonluptUhry);
  const auto verdict = oracles::is_artemis(after, budget_);
  record(kClassPreserved, verdict.artemis,
         os.str() + " leaves a " + std::string(oracles::kind_name(verdict.witness.kind)));
}

void Verifier::check_result(const Graph& g, const ArtemisColoring& result) {
  std::ostringstream os;
  os << "n=" << g.n() << " m=" << g.m();
  record(kProper, is_proper(g, result.coloring), os.str());
  record(kTraceBound, g.n() == 0 || result.trace.steps.size() <= static_cast<std::size_t>(g.n() - 1), os.str());
  if (g.n() <= budget_.max_n_exact) {
    const int chi = oracles::chromatic_number_exact(g, budget_);
    const int omega = oracles::max_clique_exact(g, budget_);
    record(kOptimal, result.coloring.num_colors == chi && chi == omega,
           os.str() + " colours=" + std::to_string(result.coloring.num_colors) + " chi=" + std::to_string(chi) +
               " omega=" + std::to_string(omega));
  } else {
    skip(kOptimal);
  }
}

int greedy_clique_size(const Graph& g) {
  int best = g.n() > 0 ? 1 : 0;
  std::vector<int> cand;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) + 1 <= best) continue;
    cand.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique{v};
    for (int w : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.adjacent(u, w); })) clique.push_back(w);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace artemis::verify
