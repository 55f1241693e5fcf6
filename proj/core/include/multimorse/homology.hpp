#pragma once

// Brute-force homology and multiparameter persistent ranks. Used as an
// oracle: deliberately plain linear algebra with no shortcuts shared with
// the reduction code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "multimorse/complex.hpp"
#include "multimorse/grade.hpp"

namespace multimorse {

namespace linalg {

// Sparse vector sorted by index, no stored zeros.
template <class Ring>
using SparseVector = std::vector<std::pair<std::uint32_t, typename Ring::value_type>>;

// x += scale * y
template <class Ring>
SparseVector<Ring> axpy(const Ring& ring, const SparseVector<Ring>& x, const typename Ring::value_type& scale,
                        const SparseVector<Ring>& y) {
  SparseVector<Ring> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, ring.mul(scale, y[j].second));
      ++j;
    } else {
      auto v = ring.add(x[i].second, ring.mul(scale, y[j].second));
      if (!ring.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Row echelon form over a field keyed by the largest index of each row.
// Optionally tracks, for every stored row, the combination of inserted
// vectors that produced it.
template <class Ring>
class Echelon {
 public:
  using Vec = SparseVector<Ring>;

  explicit Echelon(Ring ring, bool track = false) : ring_(std::move(ring)), track_(track) {}
  // Layered on top of a fixed echelon form; `base` must outlive this object
  // and rank() counts only the rows added here.
  Echelon(Ring ring, const Echelon* base) : ring_(std::move(ring)), track_(false), base_(base) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const Ring& ring() const noexcept { return ring_; }

  // Reduces v (and its tag) against the stored rows. Returns true and
  // stores the result if it is nonzero.
  bool insert(Vec v, Vec tag = {}) {
    reduce(v, tag);
    if (v.empty()) {
      last_tag_ = std::move(tag);
      return false;
    }
    pivot_.emplace(v.back().first, rows_.size());
    rows_.push_back(std::move(v));
    if (track_) tags_.push_back(std::move(tag));
    return true;
  }

  // Tag of the most recent insert that reduced to zero.
  const Vec& last_tag() const noexcept { return last_tag_; }

 private:
  const Vec* row_with_pivot(std::uint32_t pivot, std::size_t* index) const {
    if (auto it = pivot_.find(pivot); it != pivot_.end()) {
      *index = it->second;
      return &rows_[it->second];
    }
    return base_ ? base_->row_with_pivot(pivot, index) : nullptr;
  }

  void reduce(Vec& v, Vec& tag) const {
    while (!v.empty()) {
      std::size_t index = 0;
      const Vec* row = row_with_pivot(v.back().first, &index);
      if (!row) return;
      auto scale = ring_.neg(ring_.divide(v.back().second, row->back().second));
      v = axpy(ring_, v, scale, *row);
      if (track_) tag = axpy(ring_, tag, scale, tags_[index]);
    }
  }

  Ring ring_;
  bool track_;
  std::vector<Vec> rows_;
  std::vector<Vec> tags_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  Vec last_tag_;
  const Echelon* base_ = nullptr;
};

// Invariant factors (nonzero diagonal of the Smith normal form) of a dense
// integer matrix.
std::vector<boost::multiprecision::cpp_int> invariant_factors(
    std::vector<std::vector<boost::multiprecision::cpp_int>> matrix);

}  // namespace linalg

struct HomologyRanks {
  std::vector<std::size_t> betti;
  // Torsion coefficients per dimension; only filled over Z.
  std::vector<std::vector<std::string>> torsion;

  std::size_t betti_at(int q) const { return q >= 0 && static_cast<std::size_t>(q) < betti.size() ? betti[q] : 0; }
  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

using CellFilter = std::function<bool(CellId)>;

namespace detail {

template <class Ring>
linalg::SparseVector<Ring> boundary_vector(const SComplex<Ring>& complex, CellId c) {
  linalg::SparseVector<Ring> v;
  for (const auto& [tau, k] : complex.faces(c)) v.emplace_back(tau, k);
  return v;  // std::map iteration is sorted
}

template <class Ring>
std::vector<std::vector<CellId>> cells_by_dim(const SComplex<Ring>& complex, const CellFilter& keep) {
  std::vector<std::vector<CellId>> out;
  for (CellId c : complex.cells()) {
    if (keep && !keep(c)) continue;
    const int q = complex.dim(c);
    if (out.size() <= static_cast<std::size_t>(q)) out.resize(q + 1);
    out[q].push_back(c);
  }
  return out;
}

template <class Ring>
std::size_t boundary_rank(const SComplex<Ring>& complex, const std::vector<CellId>& cells) {
  linalg::Echelon<Ring> e(complex.ring());
  for (CellId c : cells) e.insert(boundary_vector(complex, c));
  return e.rank();
}

}  // namespace detail

// Homology of the subcomplex selected by `keep` (the whole complex when
// empty). Over a field the Betti numbers are exact ranks; over Z the Smith
// normal form also yields torsion.
template <class Ring>
HomologyRanks homology(const SComplex<Ring>& complex, const CellFilter& keep = {}) {
  auto by_dim = detail::cells_by_dim(complex, keep);
  HomologyRanks out;
  const std::size_t top = by_dim.size();
  out.betti.assign(top, 0);
  out.torsion.assign(top, {});
  if constexpr (Ring::is_field) {
    std::vector<std::size_t> rank(top + 1, 0);  // rank[q] = rank of boundary on q-cells
    for (std::size_t q = 1; q < top; ++q) rank[q] = detail::boundary_rank(complex, by_dim[q]);
    for (std::size_t q = 0; q < top; ++q) out.betti[q] = by_dim[q].size() - rank[q] - rank[q + 1];
  } else {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> factors(top + 1);
    for (std::size_t q = 1; q < top; ++q) {
      const auto& rows = by_dim[q - 1];
      const auto& cols = by_dim[q];
      std::unordered_map<CellId, std::size_t> row_of;
      for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
      std::vector<std::vector<cpp_int>> m(rows.size(), std::vector<cpp_int>(cols.size(), 0));
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [tau, k] : complex.faces(cols[j])) m[row_of.at(tau)][j] = cpp_int(k);
      }
      factors[q] = linalg::invariant_factors(std::move(m));
    }
    for (std::size_t q = 0; q < top; ++q) {
      out.betti[q] = by_dim[q].size() - factors[q].size() - factors[q + 1].size();
      for (const auto& d : factors[q + 1]) {
        if (d != 1) out.torsion[q].push_back(d.str());
      }
    }
  }
  while (!out.betti.empty() && out.betti.back() == 0 && out.torsion.back().empty()) {
    out.betti.pop_back();
    out.torsion.pop_back();
  }
  return out;
}

// Cycle space Z_q of a subcomplex and the echelon form of its boundary
// space B_q, both in the coordinates of q-cell ids.
template <class Ring>
struct SublevelHomologyData {
  std::vector<linalg::SparseVector<Ring>> cycles;
  linalg::Echelon<Ring> boundaries;
};

template <class Ring>
SublevelHomologyData<Ring> sublevel_homology_data(const SComplex<Ring>& complex, const CellFilter& keep, int q) {
  static_assert(Ring::is_field, "persistent ranks are computed over a field");
  const Ring& ring = complex.ring();
  SublevelHomologyData<Ring> out{{}, linalg::Echelon<Ring>(ring)};
  std::vector<CellId> q_cells, up_cells;
  for (CellId c : complex.cells()) {
    if (!keep(c)) continue;
    if (complex.dim(c) == q) q_cells.push_back(c);
    if (complex.dim(c) == q + 1) up_cells.push_back(c);
  }
  // kernel of the boundary on q-chains by tracked elimination
  linalg::Echelon<Ring> image(ring, /*track=*/true);
  for (CellId c : q_cells) {
    linalg::SparseVector<Ring> tag{{c, ring.one()}};
    if (q == 0) {
      out.cycles.push_back(std::move(tag));
      continue;
    }
    if (!image.insert(detail::boundary_vector(complex, c), tag)) out.cycles.push_back(image.last_tag());
  }
  for (CellId c : up_cells) out.boundaries.insert(detail::boundary_vector(complex, c));
  return out;
}

// Rank of H_q(S^alpha) -> H_q(S^beta) from explicit bases:
// dim(Z_q(alpha) + B_q(beta)) - dim B_q(beta).
template <class Ring>
std::size_t persistent_rank_from(const SublevelHomologyData<Ring>& at_alpha,
                                 const SublevelHomologyData<Ring>& at_beta) {
  linalg::Echelon<Ring> span(at_beta.boundaries.ring(), &at_beta.boundaries);
  for (const auto& z : at_alpha.cycles) span.insert(z);
  return span.rank();
}

template <class Ring>
std::size_t persistent_rank(const SComplex<Ring>& complex, const FiltrationAssignment& grades, const Grade& alpha,
                            const Grade& beta, int q) {
  if (!leq(alpha, beta)) {
    throw Error(Module::homology, "persistent rank needs alpha <= beta, got " + to_string(alpha) + " and " +
                                      to_string(beta));
  }
  auto in_alpha = [&](CellId c) { return leq(grades.at(c), alpha); };
  auto in_beta = [&](CellId c) { return leq(grades.at(c), beta); };
  return persistent_rank_from(sublevel_homology_data(complex, in_alpha, q),
                              sublevel_homology_data(complex, in_beta, q));
}

struct RankEntry {
  std::size_t alpha = 0;  // index into PersistentRankTable::grid
  std::size_t beta = 0;
  int q = 0;
  std::size_t rank = 0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct PersistentRankTable {
  std::vector<Grade> grid;
  std::vector<RankEntry> entries;  // every comparable pair, q = 0..q_max

  // Lines "RANK q alpha beta value".
  std::string to_lines() const;
};

// Persistent ranks for every comparable pair of grid points.
template <class Ring>
PersistentRankTable rank_table(const SComplex<Ring>& complex, const FiltrationAssignment& grades,
                               const std::vector<Grade>& grid, int q_max) {
  PersistentRankTable table;
  table.grid = grid;
  for (int q = 0; q <= q_max; ++q) {
    std::vector<SublevelHomologyData<Ring>> data;
    data.reserve(grid.size());
    for (const Grade& g : grid) {
      data.push_back(sublevel_homology_data(complex, [&](CellId c) { return leq(grades.at(c), g); }, q));
    }
    for (std::size_t a = 0; a < grid.size(); ++a) {
      for (std::size_t b = 0; b < grid.size(); ++b) {
        if (!leq(grid[a], grid[b])) continue;
        table.entries.push_back({a, b, q, persistent_rank_from(data[a], data[b])});
      }
    }
  }
  return table;
}

template <class Ring>
PersistentRankTable rank_table(const SComplex<Ring>& complex, const FiltrationAssignment& grades, int q_max) {
  auto cells = complex.cells();
  return rank_table(complex, grades, critical_grades(grades, cells), q_max);
}

struct VerificationReport {
  bool pass = true;
  std::size_t compared = 0;
  std::optional<RankEntry> expected;  // first mismatch: value on the original complex
  std::optional<RankEntry> actual;    // and on the reduced one
  PersistentRankTable original;
  PersistentRankTable reduced;

  std::string summary() const;
};

VerificationReport compare_tables(PersistentRankTable original, PersistentRankTable reduced);

// Compares rank tables of the original and the reduced complex on the
// critical grades of the original complex.
template <class Ring>
VerificationReport verify_equivalence(const SComplex<Ring>& original, const FiltrationAssignment& original_grades,
                                      const SComplex<Ring>& reduced, const FiltrationAssignment& reduced_grades,
                                      int q_max) {
  auto cells = original.cells();
  auto grid = critical_grades(original_grades, cells);
  return compare_tables(rank_table(original, original_grades, grid, q_max),
                        rank_table(reduced, reduced_grades, grid, q_max));
}

}  // namespace multimorse
