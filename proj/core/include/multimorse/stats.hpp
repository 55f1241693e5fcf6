#pragma once

#include <string>
#include <vector>

#include "multimorse/complex.hpp"

namespace multimorse {

struct StatsRow {
  int dim = -1;  // -1 for the totals row
  std::size_t original = 0;
  std::size_t reduced = 0;
  double percent = 0.0;  // 100 * reduced / original, 0 when original is 0
};

std::vector<StatsRow> stats_rows(const std::vector<std::size_t>& original_per_dim,
                                 const std::vector<std::size_t>& reduced_per_dim);

// Per-dimension cell counts #S_q, #C_q and the kept percentage (one
// decimal), plus a totals row.
std::string stats_table(const std::vector<std::size_t>& original_per_dim,
                        const std::vector<std::size_t>& reduced_per_dim);

template <class Ring>
std::vector<std::size_t> counts_by_dim(const SComplex<Ring>& complex) {
  std::vector<std::size_t> out;
  for (CellId c : complex.cells()) {
    const auto q = static_cast<std::size_t>(complex.dim(c));
    if (out.size() <= q) out.resize(q + 1, 0);
    ++out[q];
  }
  return out;
}

}  // namespace multimorse
