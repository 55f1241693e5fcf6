#include "multimorse/homology.hpp"

#include <utility>

namespace multimorse {

namespace linalg {

using boost::multiprecision::cpp_int;

std::vector<cpp_int> invariant_factors(std::vector<std::vector<cpp_int>> m) {
  std::vector<cpp_int> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return out;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

}  // namespace linalg

std::string PersistentRankTable::to_lines() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "RANK " << e.q << ' ' << to_string(grid[e.alpha]) << ' ' << to_string(grid[e.beta]) << ' ' << e.rank
       << '\n';
  }
  return os.str();
}

VerificationReport compare_tables(PersistentRankTable original, PersistentRankTable reduced) {
  VerificationReport report;
  if (original.grid != reduced.grid || original.entries.size() != reduced.entries.size()) {
    throw Error(Module::homology, "rank tables were evaluated on different grids");
  }
  for (std::size_t i = 0; i < original.entries.size(); ++i) {
    ++report.compared;
    if (original.entries[i] != reduced.entries[i]) {
      report.pass = false;
      report.expected = original.entries[i];
      report.actual = reduced.entries[i];
      break;
    }
  }
  report.original = std::move(original);
  report.reduced = std::move(reduced);
  return report;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  if (pass) {
    os << "PASS persistent ranks agree on " << compared << " (alpha, beta, q) triples over "
       << original.grid.size() << " critical grades";
  } else {
    const auto& g = original.grid;
    os << "FAIL first mismatch at q=" << expected->q << " alpha=" << to_string(g[expected->alpha])
       << " beta=" << to_string(g[expected->beta]) << ": original rank " << expected->rank << ", reduced rank "
       << actual->rank;
  }
  return os.str();
}

}  // namespace multimorse
