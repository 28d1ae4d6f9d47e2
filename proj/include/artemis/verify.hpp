#pragma once

// Engine observer that re-checks every intermediate structure with the
// exact oracles. Checks on a level larger than the oracle budget are counted
// as skipped.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artemis/engine.hpp"
#include "artemis/oracles.hpp"

namespace artemis::verify {

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

class Verifier : public EngineObserver {
 public:
  explicit Verifier(oracles::OracleBudget budget = {}, bool check_handles = true)
      : budget_(budget), check_handles_(check_handles) {}

  void on_interesting(const LevelView& view, const InterestingSetResult& r) override;
  void on_outer_path(const LevelView& view, const MaximalInteresting& mi, const std::optional<OuterPath>& p) override;
  void on_even_pair(const LevelView& view, const MaximalInteresting& mi, const OuterPath& p,
                    const EvenPairState& st) override;
  void on_bottom_pair(const LevelView& view, const DisjointCliques& parts, int a, int b) override;
  void on_contraction(const Graph& before, const ContractionStep& step, const Graph& after) override;

  /// Final checks on a finished run: proper, optimal, trace bound.
  void check_result(const Graph& g, const ArtemisColoring& result);

  const std::map<std::string, CheckTally>& tallies() const { return tallies_; }
  const std::vector<std::string>& failures() const { return failures_; }
  bool ok() const { return failures_.empty(); }

  /// Tally for one named check (zeros if it never ran).
  CheckTally tally(const std::string& name) const;

 private:
  void record(const std::string& name, bool pass, const std::string& detail = {});
  void skip(const std::string& name);
  bool within(int n) const { return n <= budget_.max_n; }

  oracles::OracleBudget budget_;
  bool check_handles_;
  std::map<std::string, CheckTally> tallies_;
  std::vector<std::string> failures_;
};

/// Greedy lower-bound clique: best of growing a clique from every vertex,
/// taking neighbours in descending degree order.
int greedy_clique_size(const Graph& g);

// Check names used in tallies().
inline constexpr const char* kMaximalInteresting = "maximal-interesting";
inline constexpr const char* kDisjointCliques = "disjoint-cliques-verdict";
inline constexpr const char* kHandleFromInteresting = "interesting-gives-handle";
inline constexpr const char* kMinimalOuterPath = "minimal-outer-path";
inline constexpr const char* kNoOuterPath = "no-outer-path-verdict";
inline constexpr const char* kEvenPairSides = "even-pair-sides";
inline constexpr const char* kBottomPair = "bottom-case-pair";
inline constexpr const char* kEvenPair = "even-pair";
inline constexpr const char* kSpecialEvenPair = "special-even-pair";
inline constexpr const char* kFonluptUhry = "chi-omega-invariance";
inline constexpr const char* kClassPreserved = "class-preserved";
inline constexpr const char* kProper = "proper-coloring";
inline constexpr const char* kOptimal = "optimal-coloring";
inline constexpr const char* kTraceBound = "trace-bound";

}  // namespace artemis::verify
