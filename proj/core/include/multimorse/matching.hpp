#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multimorse/complex.hpp"
#include "multimorse/grade.hpp"
#include "multimorse/indexing.hpp"
#include "multimorse/simplicial.hpp"

namespace multimorse {

enum class LinkVariant { strict, weak };

// Lower link of an apex vertex v: simplices tau with v * tau in the complex
// and every vertex of tau below f(v). cones[i] is the cell v * cells[i].
struct LowerLinkComplex {
  VertexId apex = 0;
  std::vector<CellId> cells;  // sorted
  std::vector<CellId> cones;

  bool empty() const noexcept { return cells.empty(); }
  std::size_t size() const noexcept { return cells.size(); }
};

// Strict: every vertex w of tau has f(w) < f(v) (componentwise <=, not equal).
LowerLinkComplex lower_link(const SimplicialComplex& complex, const MeasuringFunction& f, VertexId v);
// Weak: f(w) <= f(v) componentwise.
LowerLinkComplex weak_lower_link(const SimplicialComplex& complex, const MeasuringFunction& f, VertexId v);

enum class CellRole : std::uint8_t { unclassified, a, b, c };

// Partition (A, B, C) of the cells with the pairing m : A -> B.
class MatchPartition {
 public:
  static constexpr CellId kNoMate = ~CellId{0};

  MatchPartition() = default;
  explicit MatchPartition(std::size_t cell_count);

  std::size_t cell_count() const noexcept { return role_.size(); }
  CellRole role(CellId c) const { return role_.at(c); }
  // m(c) for c in A, m^{-1}(c) for c in B, kNoMate otherwise.
  CellId mate(CellId c) const { return mate_.at(c); }

  // A in the order the pairs were generated.
  const std::vector<CellId>& generation_order() const noexcept { return generation_; }
  std::vector<CellId> a_cells() const;
  std::vector<CellId> b_cells() const;
  std::vector<CellId> c_cells() const;
  std::size_t pair_count() const noexcept { return generation_.size(); }
  std::size_t critical_count() const noexcept;

  void add_pair(CellId lower, CellId upper);
  void add_critical(CellId c);

  friend bool operator==(const MatchPartition&, const MatchPartition&) = default;

 private:
  std::vector<CellRole> role_;
  std::vector<CellId> mate_;
  std::vector<CellId> generation_;
};

struct PartitionOptions {
  LinkVariant variant = LinkVariant::strict;
  // Outer vertex loop workers; 1 runs inline.
  unsigned threads = 1;
};

// Recursive lower-link partition. Vertices are visited in increasing index
// order. Requires an indexing compatible with f on adjacent vertices.
MatchPartition partition(const SimplicialComplex& complex, const MeasuringFunction& f,
                         const IndexingMap& index, PartitionOptions options = {});

std::uint32_t max_index(const SimplicialComplex& complex, const IndexingMap& index, CellId sigma);

// Face-relation digraph, edges pointing from a cell to its primary faces,
// except that the edge between tau in A and m(tau) points upward.
struct Digraph {
  std::vector<std::vector<CellId>> out;
  std::size_t edge_count = 0;
  std::size_t reversed_count = 0;

  std::size_t node_count() const noexcept { return out.size(); }
};

Digraph modified_hasse(const SimplicialComplex& complex, const MatchPartition& matching);

// Generic form over an S-complex; pairs whose cells have been removed are ignored.
template <class Ring>
Digraph modified_hasse(const SComplex<Ring>& complex, const MatchPartition& matching) {
  Digraph g;
  g.out.resize(complex.id_bound());
  for (CellId s : complex.cells()) {
    for (const auto& entry : complex.faces(s)) {
      CellId t = entry.first;
      bool reversed = t < matching.cell_count() && matching.role(t) == CellRole::a && matching.mate(t) == s;
      if (reversed) {
        g.out[t].push_back(s);
        ++g.reversed_count;
      } else {
        g.out[s].push_back(t);
      }
      ++g.edge_count;
    }
  }
  return g;
}

bool is_acyclic(const Digraph& graph);

// First violated matching invariant, if any: partition of all cells,
// bijective m onto primary cofaces with unit incidence, compatibility with
// the filtration (grade(m(s)) <= grade(s)) and acyclicity.
std::optional<std::string> find_matching_violation(const SimplicialComplex& complex,
                                                   const FiltrationAssignment& grades,
                                                   const MatchPartition& matching);

}  // namespace multimorse
