#include "multimorse/indexing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace multimorse {

IndexingMap::IndexingMap(std::vector<std::uint32_t> index_of_vertex) : index_(std::move(index_of_vertex)) {}

std::vector<VertexId> IndexingMap::order() const {
  std::vector<VertexId> out(index_.size());
  std::iota(out.begin(), out.end(), VertexId{0});
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) { return index_[a] < index_[b]; });
  return out;
}

std::size_t ComparabilityDag::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

ComparabilityDag build_dag(const MeasuringFunction& f) {
  const std::size_t n = f.size();
  ComparabilityDag dag;
  dag.successors.resize(n);
  dag.in_degree.assign(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w = 0; w < n; ++w) {
      if (u != w && leq_neq(f[u], f[w])) {
        dag.successors[u].push_back(w);
        ++dag.in_degree[w];
      }
    }
  }
  return dag;
}

IndexingMap topo_sort_kahn(const ComparabilityDag& dag) {
  const std::size_t n = dag.node_count();
  std::vector<std::uint32_t> in_degree = dag.in_degree;
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (in_degree[v] == 0) ready.push(v);
  }
  std::vector<std::uint32_t> index(n, 0);
  std::uint32_t next = 0;
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    index[u] = next++;
    for (VertexId w : dag.successors[u]) {
      if (--in_degree[w] == 0) ready.push(w);
    }
  }
  if (next != n) {
    throw Error(Module::indexing, "comparability graph has a directed cycle (" +
                                      std::to_string(n - next) + " vertices unsorted)");
  }
  return IndexingMap(std::move(index));
}

IndexingMap lex_indexing(const MeasuringFunction& f) {
  const std::size_t n = f.size();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return f[a] < f[b]; });
  std::vector<std::uint32_t> index(n);
  for (std::uint32_t i = 0; i < n; ++i) index[order[i]] = i;
  return IndexingMap(std::move(index));
}

bool validate_indexing(const MeasuringFunction& f, const IndexingMap& index) {
  const std::size_t n = f.size();
  if (index.size() != n) return false;
  std::unordered_set<std::uint32_t> seen;
  for (VertexId v = 0; v < n; ++v) {
    if (!seen.insert(index[v]).second) return false;
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (v != w && leq_neq(f[v], f[w]) && !(index[v] < index[w])) return false;
    }
  }
  return true;
}

}  // namespace multimorse
