#include "multimorse/matching.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace multimorse {

namespace {

// A partition of a (sub)complex expressed in cells of the full complex.
// b[i] is the partner of a[i].
struct LocalPartition {
  std::vector<CellId> a;
  std::vector<CellId> b;
  std::vector<CellId> c;
};

class Partitioner {
 public:
  Partitioner(const SimplicialComplex& complex, const MeasuringFunction& f, const IndexingMap& index,
              LinkVariant variant)
      : s_(complex), f_(f), index_(index), variant_(variant) {}

  // Classifies v and the cone over its lower link inside `scope` (sorted
  // cell list, or the whole complex when null).
  void process_vertex(VertexId v, const std::vector<CellId>* scope, LocalPartition& out) const {
    LowerLinkComplex link = link_in(v, scope);
    if (link.empty()) {
      out.c.push_back(v);
      return;
    }
    out.a.push_back(v);
    LocalPartition sub = run(link.cells);

    std::vector<VertexId> critical_vertices;
    for (CellId c : sub.c) {
      if (s_.dim(c) == 0) critical_vertices.push_back(c);
    }
    VertexId w0 = pick_w0(critical_vertices);

    auto cone = [&](CellId tau) {
      auto it = std::lower_bound(link.cells.begin(), link.cells.end(), tau);
      return link.cones[static_cast<std::size_t>(it - link.cells.begin())];
    };
    out.b.push_back(cone(w0));
    for (CellId c : sub.c) {
      if (c != w0) out.c.push_back(cone(c));
    }
    for (std::size_t i = 0; i < sub.a.size(); ++i) {
      out.a.push_back(cone(sub.a[i]));
      out.b.push_back(cone(sub.b[i]));
    }
  }

  // Full partition of a lower-link subcomplex.
  LocalPartition run(const std::vector<CellId>& scope) const {
    std::vector<VertexId> vertices;
    for (CellId c : scope) {
      if (s_.dim(c) == 0) vertices.push_back(c);
    }
    std::sort(vertices.begin(), vertices.end(),
              [&](VertexId x, VertexId y) { return index_[x] < index_[y]; });
    LocalPartition out;
    for (VertexId v : vertices) process_vertex(v, &scope, out);

    std::vector<CellId> classified;
    classified.reserve(out.a.size() + out.b.size() + out.c.size());
    classified.insert(classified.end(), out.a.begin(), out.a.end());
    classified.insert(classified.end(), out.b.begin(), out.b.end());
    classified.insert(classified.end(), out.c.begin(), out.c.end());
    std::sort(classified.begin(), classified.end());
    std::set_difference(scope.begin(), scope.end(), classified.begin(), classified.end(),
                        std::back_inserter(out.c));
    return out;
  }

  LowerLinkComplex link_in(VertexId v, const std::vector<CellId>* scope) const {
    LowerLinkComplex link;
    link.apex = v;
    std::vector<std::pair<CellId, CellId>> entries;
    for (CellId sigma : s_.cofaces_closure(v)) {
      if (scope && !std::binary_search(scope->begin(), scope->end(), sigma)) continue;
      CellId tau = s_.face_without(sigma, v);
      bool below_all = true;
      for (VertexId w : s_.vertices(tau)) {
        if (!below(w, v)) {
          below_all = false;
          break;
        }
      }
      if (below_all) entries.emplace_back(tau, sigma);
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& [tau, sigma] : entries) {
      link.cells.push_back(tau);
      link.cones.push_back(sigma);
    }
    return link;
  }

 private:
  // The weak variant breaks ties between equal grades by index, which keeps
  // the lower-link relation antisymmetric.
  bool below(VertexId w, VertexId v) const {
    if (variant_ == LinkVariant::strict) return leq_neq(f_[w], f_[v]);
    if (!leq(f_[w], f_[v])) return false;
    return f_[w] != f_[v] || index_[w] < index_[v];
  }

  VertexId pick_w0(const std::vector<VertexId>& candidates) const {
    std::vector<VertexId> minimal;
    for (VertexId w : candidates) {
      bool is_minimal = true;
      for (VertexId u : candidates) {
        if (u != w && below(u, w)) {
          is_minimal = false;
          break;
        }
      }
      if (is_minimal) minimal.push_back(w);
    }
    if (minimal.empty()) {
      throw Error(Module::matching, "no minimal critical vertex in a non-empty lower link");
    }
    return *std::min_element(minimal.begin(), minimal.end(),
                             [&](VertexId x, VertexId y) { return index_[x] < index_[y]; });
  }

  const SimplicialComplex& s_;
  const MeasuringFunction& f_;
  const IndexingMap& index_;
  LinkVariant variant_;
};

void check_preconditions(const SimplicialComplex& complex, const MeasuringFunction& f,
                         const IndexingMap& index) {
  const std::size_t n = complex.vertex_count();
  if (f.size() != n) {
    throw Error(Module::matching, "measuring function covers " + std::to_string(f.size()) + " of " +
                                      std::to_string(n) + " vertices");
  }
  if (index.size() != n) throw Error(Module::matching, "indexing map has wrong size");
  std::vector<char> used(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (index[v] >= n || used[index[v]]) throw Error(Module::matching, "indexing map is not injective");
    used[index[v]] = 1;
  }
  // Only adjacent vertices are ever compared by the partition.
  if (complex.max_dim() >= 1) {
    for (CellId e = static_cast<CellId>(n); e < complex.size() && complex.dim(e) == 1; ++e) {
      auto vs = complex.vertices(e);
      VertexId u = vs[0], w = vs[1];
      if ((leq_neq(f[u], f[w]) && index[u] > index[w]) || (leq_neq(f[w], f[u]) && index[w] > index[u])) {
        throw Error(Module::matching, "indexing is not compatible with the measuring function on edge [" +
                                          std::to_string(u) + "," + std::to_string(w) + "]");
      }
    }
  }
}

}  // namespace

LowerLinkComplex lower_link(const SimplicialComplex& complex, const MeasuringFunction& f, VertexId v) {
  LowerLinkComplex link;
  link.apex = v;
  std::vector<std::pair<CellId, CellId>> entries;
  for (CellId sigma : complex.cofaces_closure(v)) {
    CellId tau = complex.face_without(sigma, v);
    auto vs = complex.vertices(tau);
    if (std::all_of(vs.begin(), vs.end(), [&](VertexId w) { return leq_neq(f[w], f[v]); })) {
      entries.emplace_back(tau, sigma);
    }
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& [tau, sigma] : entries) {
    link.cells.push_back(tau);
    link.cones.push_back(sigma);
  }
  return link;
}

LowerLinkComplex weak_lower_link(const SimplicialComplex& complex, const MeasuringFunction& f, VertexId v) {
  LowerLinkComplex link;
  link.apex = v;
  std::vector<std::pair<CellId, CellId>> entries;
  for (CellId sigma : complex.cofaces_closure(v)) {
    CellId tau = complex.face_without(sigma, v);
    auto vs = complex.vertices(tau);
    if (std::all_of(vs.begin(), vs.end(), [&](VertexId w) { return leq(f[w], f[v]); })) {
      entries.emplace_back(tau, sigma);
    }
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& [tau, sigma] : entries) {
    link.cells.push_back(tau);
    link.cones.push_back(sigma);
  }
  return link;
}

MatchPartition::MatchPartition(std::size_t cell_count)
    : role_(cell_count, CellRole::unclassified), mate_(cell_count, kNoMate) {}

std::vector<CellId> MatchPartition::a_cells() const {
  std::vector<CellId> out = generation_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellId> MatchPartition::b_cells() const {
  std::vector<CellId> out;
  for (CellId a : generation_) out.push_back(mate_[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellId> MatchPartition::c_cells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < role_.size(); ++c) {
    if (role_[c] == CellRole::c) out.push_back(c);
  }
  return out;
}

std::size_t MatchPartition::critical_count() const noexcept {
  return static_cast<std::size_t>(std::count(role_.begin(), role_.end(), CellRole::c));
}

void MatchPartition::add_pair(CellId lower, CellId upper) {
  if (role_.at(lower) != CellRole::unclassified || role_.at(upper) != CellRole::unclassified) {
    throw Error(Module::matching, "cell classified twice while pairing " + std::to_string(lower) + " with " +
                                      std::to_string(upper));
  }
  role_[lower] = CellRole::a;
  role_[upper] = CellRole::b;
  mate_[lower] = upper;
  mate_[upper] = lower;
  generation_.push_back(lower);
}

void MatchPartition::add_critical(CellId c) {
  if (role_.at(c) != CellRole::unclassified) {
    throw Error(Module::matching, "cell " + std::to_string(c) + " classified twice");
  }
  role_[c] = CellRole::c;
}

MatchPartition partition(const SimplicialComplex& complex, const MeasuringFunction& f,
                         const IndexingMap& index, PartitionOptions options) {
  check_preconditions(complex, f, index);
  Partitioner partitioner(complex, f, index, options.variant);
  const std::vector<VertexId> order = index.order();
  std::vector<LocalPartition> per_vertex(order.size());

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || order.size() < 2) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      partitioner.process_vertex(order[i], nullptr, per_vertex[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < order.size() && !failed; i = next++) {
            partitioner.process_vertex(order[i], nullptr, per_vertex[i]);
          }
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  MatchPartition out(complex.size());
  for (const LocalPartition& local : per_vertex) {
    for (std::size_t i = 0; i < local.a.size(); ++i) out.add_pair(local.a[i], local.b[i]);
    for (CellId c : local.c) out.add_critical(c);
  }
  for (CellId c = 0; c < complex.size(); ++c) {
    if (out.role(c) == CellRole::unclassified) out.add_critical(c);
  }
  return out;
}

std::uint32_t max_index(const SimplicialComplex& complex, const IndexingMap& index, CellId sigma) {
  std::uint32_t m = 0;
  for (VertexId v : complex.vertices(sigma)) m = std::max(m, index[v]);
  return m;
}

Digraph modified_hasse(const SimplicialComplex& complex, const MatchPartition& matching) {
  Digraph g;
  g.out.resize(complex.size());
  for (CellId s = 0; s < complex.size(); ++s) {
    for (CellId t : complex.faces(s)) {
      if (matching.role(t) == CellRole::a && matching.mate(t) == s) {
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

bool is_acyclic(const Digraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::uint32_t> in_degree(n, 0);
  for (const auto& targets : graph.out) {
    for (CellId t : targets) ++in_degree[t];
  }
  std::vector<CellId> ready;
  for (CellId v = 0; v < n; ++v) {
    if (in_degree[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    CellId u = ready.back();
    ready.pop_back();
    ++visited;
    for (CellId t : graph.out[u]) {
      if (--in_degree[t] == 0) ready.push_back(t);
    }
  }
  return visited == n;
}

std::optional<std::string> find_matching_violation(const SimplicialComplex& complex,
                                                   const FiltrationAssignment& grades,
                                                   const MatchPartition& matching) {
  if (matching.cell_count() != complex.size()) return "partition covers a different number of cells";
  std::size_t a = 0, b = 0, c = 0;
  for (CellId x = 0; x < complex.size(); ++x) {
    switch (matching.role(x)) {
      case CellRole::a: ++a; break;
      case CellRole::b: ++b; break;
      case CellRole::c: ++c; break;
      case CellRole::unclassified: return "cell " + std::to_string(x) + " is unclassified";
    }
  }
  if (a != b || a != matching.pair_count()) return "|A| and |B| differ";
  for (CellId x : matching.generation_order()) {
    CellId up = matching.mate(x);
    if (matching.role(x) != CellRole::a || up >= complex.size() || matching.role(up) != CellRole::b ||
        matching.mate(up) != x) {
      return "pairing of cell " + std::to_string(x) + " is not a bijection A -> B";
    }
    int k = complex.kappa(up, x);
    if (k != 1 && k != -1) {
      return "m(" + std::to_string(x) + ") = " + std::to_string(up) + " is not a primary coface";
    }
    if (!leq(grades.at(up), grades.at(x))) {
      return "m(" + std::to_string(x) + ") enters the filtration later than " + std::to_string(x);
    }
  }
  if (!is_acyclic(modified_hasse(complex, matching))) return "modified Hasse diagram has a cycle";
  return std::nullopt;
}

}  // namespace multimorse
