#pragma once

#include <cstdint>
#include <vector>

#include "multimorse/grade.hpp"

namespace multimorse {

// Injective vertex numbering I : S_0 -> [0, N).
class IndexingMap {
 public:
  IndexingMap() = default;
  explicit IndexingMap(std::vector<std::uint32_t> index_of_vertex);

  std::size_t size() const noexcept { return index_.size(); }
  std::uint32_t operator[](VertexId v) const { return index_.at(v); }
  const std::vector<std::uint32_t>& indices() const noexcept { return index_; }
  // Vertices listed by increasing index. Only meaningful for a permutation.
  std::vector<VertexId> order() const;

 private:
  std::vector<std::uint32_t> index_;
};

// Edge (u, w) for every pair with f(u) strictly below f(w) in the partial order.
struct ComparabilityDag {
  std::vector<std::vector<VertexId>> successors;
  std::vector<std::uint32_t> in_degree;

  std::size_t node_count() const noexcept { return successors.size(); }
  std::size_t edge_count() const noexcept;
};

ComparabilityDag build_dag(const MeasuringFunction& f);

// Kahn's algorithm with the ready set kept as a min-heap on vertex id, so
// the linear extension is deterministic. Throws if the graph has a cycle.
IndexingMap topo_sort_kahn(const ComparabilityDag& dag);

// Sort by (f(v) lexicographically, v). O(N log N) and order-compatible,
// since a strict componentwise step is also a strict lexicographic step.
IndexingMap lex_indexing(const MeasuringFunction& f);

// True iff I is injective and f(v) strictly below f(w) implies I(v) < I(w).
bool validate_indexing(const MeasuringFunction& f, const IndexingMap& index);

}  // namespace multimorse
