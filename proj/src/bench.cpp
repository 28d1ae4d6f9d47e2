#include "artemis/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace artemis::bench {

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double sx = 0, sy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) return std::nullopt;
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

BenchReport run_bench(gen::Family family, std::span<const int> sizes, double density, std::uint64_t seed) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("bench: sizes must be strictly ascending");
  BenchReport report{family, density, seed, {}, std::nullopt, std::nullopt};
  for (int n : sizes) {
    const Graph g = gen::generate(family, n, density, seed + static_cast<std::uint64_t>(n));
    BenchRow row;
    row.n = g.n();
    row.m = g.m();
    EngineOptions first_opts;
    first_opts.counters = &row.first_search;
    (void)find_special_even_pair(g, first_opts);

    EngineOptions opts;
    opts.counters = &row.run;
    const auto t0 = std::chrono::steady_clock::now();
    const ArtemisColoring result = color_artemis(g, opts);
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.contractions = static_cast<int>(result.trace.steps.size());
    row.num_colors = result.coloring.num_colors;
    report.rows.push_back(row);
  }
  std::vector<double> n2m, nm, run_ops, search_ops;
  for (const auto& r : report.rows) {
    const double n = r.n, m = static_cast<double>(r.m);
    n2m.push_back(n * n * m);
    nm.push_back(n * m);
    run_ops.push_back(static_cast<double>(r.run.total()));
    search_ops.push_back(static_cast<double>(r.first_search.total()));
  }
  report.slope_run_vs_n2m = loglog_slope(n2m, run_ops);
  report.slope_search_vs_nm = loglog_slope(nm, search_ops);
  return report;
}

std::string format_table(const BenchReport& report) {
  std::ostringstream os;
  char buf[256];
  os << "family=" << gen::family_name(report.family) << " density=" << report.density << " seed=" << report.seed << '\n';
  std::snprintf(buf, sizeof buf, "%6s %9s %6s %6s %14s %14s %12s %12s %12s %10s\n", "n", "m", "contr", "colors",
                "run_ops", "search_ops", "interesting", "outer_path", "even_pair", "wall_ms");
  os << buf;
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%6d %9lld %6d %6d %14llu %14llu %12llu %12llu %12llu %10.2f\n", r.n,
                  static_cast<long long>(r.m), r.contractions, r.num_colors,
                  static_cast<unsigned long long>(r.run.total()), static_cast<unsigned long long>(r.first_search.total()),
                  static_cast<unsigned long long>(r.run.interesting), static_cast<unsigned long long>(r.run.outer_path),
                  static_cast<unsigned long long>(r.run.even_pair), r.wall_ms);
    os << buf;
  }
  if (report.slope_run_vs_n2m) os << "slope(run_ops vs n^2 m) = " << *report.slope_run_vs_n2m << '\n';
  if (report.slope_search_vs_nm) os << "slope(search_ops vs n m) = " << *report.slope_search_vs_nm << '\n';
  return os.str();
}

}  // namespace artemis::bench
