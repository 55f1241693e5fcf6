#include "multimorse/stats.hpp"

#include <algorithm>
#include <cstdio>

namespace multimorse {

std::vector<StatsRow> stats_rows(const std::vector<std::size_t>& original_per_dim,
                                 const std::vector<std::size_t>& reduced_per_dim) {
  const std::size_t dims = std::max<std::size_t>({original_per_dim.size(), reduced_per_dim.size(), 1});
  auto at = [](const std::vector<std::size_t>& v, std::size_t q) { return q < v.size() ? v[q] : 0; };
  auto pct = [](std::size_t c, std::size_t s) { return s == 0 ? 0.0 : 100.0 * static_cast<double>(c) / s; };
  std::vector<StatsRow> rows;
  StatsRow total;
  for (std::size_t q = 0; q < dims; ++q) {
    StatsRow r{static_cast<int>(q), at(original_per_dim, q), at(reduced_per_dim, q), 0.0};
    r.percent = pct(r.reduced, r.original);
    total.original += r.original;
    total.reduced += r.reduced;
    rows.push_back(r);
  }
  total.percent = pct(total.reduced, total.original);
  rows.push_back(total);
  return rows;
}

std::string stats_table(const std::vector<std::size_t>& original_per_dim,
                        const std::vector<std::size_t>& reduced_per_dim) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %10s %10s %7s\n", "dim", "#S", "#C", "%");
  out += line;
  for (const auto& r : stats_rows(original_per_dim, reduced_per_dim)) {
    std::string label = r.dim < 0 ? "total" : std::to_string(r.dim);
    std::snprintf(line, sizeof line, "%-6s %10zu %10zu %7.1f\n", label.c_str(), r.original, r.reduced, r.percent);
    out += line;
  }
  return out;
}

}  // namespace multimorse
