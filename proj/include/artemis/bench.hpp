#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artemis/engine.hpp"
#include "artemis/generate.hpp"

namespace artemis::bench {

struct BenchRow {
  int n = 0;
  std::int64_t m = 0;
  int contractions = 0;
  int num_colors = 0;
  /// Operation counters for the whole colouring run.
  OpCounters run;
  /// Operation counters for the first special-even-pair search on the input.
  OpCounters first_search;
  double wall_ms = 0.0;
};

struct BenchReport {
  gen::Family family{};
  double density = 0.0;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
  /// Slope of log(total run ops) against log(n^2 m); needs two sizes.
  std::optional<double> slope_run_vs_n2m;
  /// Slope of log(first-search ops) against log(n m).
  std::optional<double> slope_search_vs_nm;
};

/// Least-squares slope of log(y) on log(x). Needs at least two points with
/// distinct x; returns nullopt otherwise.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

/// One instance per size, generated with seed + n. Sizes must be ascending.
BenchReport run_bench(gen::Family family, std::span<const int> sizes, double density, std::uint64_t seed);

std::string format_table(const BenchReport& report);

}  // namespace artemis::bench
