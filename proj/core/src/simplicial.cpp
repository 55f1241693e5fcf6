#include "multimorse/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace multimorse {

namespace {

constexpr int kMaxSimplexDim = 16;

}  // namespace

SimplicialComplex SimplicialComplex::build(std::size_t vertex_count,
                                           const std::vector<std::vector<VertexId>>& maximal_simplices) {
  std::vector<std::vector<std::vector<VertexId>>> by_dim(1);
  for (const auto& raw : maximal_simplices) {
    if (raw.empty()) continue;
    std::vector<VertexId> s = raw;
    for (VertexId v : s) {
      if (v >= vertex_count) {
        throw Error(Module::complex, "vertex id " + std::to_string(v) + " out of range [0, " +
                                         std::to_string(vertex_count) + ")");
      }
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Module::complex, "duplicate vertex " +
                                       std::to_string(*std::adjacent_find(s.begin(), s.end())) +
                                       " in simplex");
    }
    const int q = static_cast<int>(s.size()) - 1;
    if (q > kMaxSimplexDim) throw Error(Module::complex, "simplex dimension too large");
    if (by_dim.size() <= static_cast<std::size_t>(q)) by_dim.resize(q + 1);
    // every subset with at least two vertices; vertices are added below
    const std::uint32_t full = (1u << s.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      int bits = __builtin_popcount(mask);
      if (bits < 2) continue;
      std::vector<VertexId> face;
      face.reserve(bits);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      by_dim[bits - 1].push_back(std::move(face));
    }
  }

  SimplicialComplex out;
  out.vertex_count_ = vertex_count;
  out.vertex_offset_.push_back(0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    out.dim_.push_back(0);
    out.vertex_data_.push_back(v);
    out.vertex_offset_.push_back(static_cast<std::uint32_t>(out.vertex_data_.size()));
  }
  out.dim_begin_.push_back(0);
  if (vertex_count == 0) {
    out.dim_begin_.clear();
    out.dim_begin_.push_back(0);  // max_dim() == -1
    return out;
  }
  for (std::size_t q = 1; q < by_dim.size(); ++q) {
    auto& list = by_dim[q];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) break;
    out.dim_begin_.push_back(static_cast<CellId>(out.dim_.size()));
    for (const auto& s : list) {
      out.dim_.push_back(static_cast<int>(q));
      out.vertex_data_.insert(out.vertex_data_.end(), s.begin(), s.end());
      out.vertex_offset_.push_back(static_cast<std::uint32_t>(out.vertex_data_.size()));
    }
  }
  out.dim_begin_.push_back(static_cast<CellId>(out.dim_.size()));

  // faces: the i-th face omits the i-th vertex; vertices have none
  out.face_data_.assign(out.vertex_data_.size(), 0);
  std::vector<VertexId> scratch;
  for (CellId c = 0; c < out.size(); ++c) {
    if (out.dim_[c] == 0) continue;
    auto vs = out.vertices(c);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      scratch.assign(vs.begin(), vs.end());
      scratch.erase(scratch.begin() + static_cast<std::ptrdiff_t>(i));
      auto f = out.find(scratch);
      out.face_data_[out.vertex_offset_[c] + i] = *f;  // closed under faces by construction
    }
  }

  // cofaces: transpose of faces, in increasing id order
  std::vector<std::uint32_t> counts(out.size() + 1, 0);
  for (CellId c = 0; c < out.size(); ++c) {
    for (CellId f : out.faces(c)) ++counts[f + 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
  out.coface_offset_ = counts;
  out.coface_data_.assign(counts.back(), 0);
  std::vector<std::uint32_t> fill(counts.begin(), counts.end() - 1);
  for (CellId c = 0; c < out.size(); ++c) {
    for (CellId f : out.faces(c)) out.coface_data_[fill[f]++] = c;
  }
  return out;
}

void SimplicialComplex::require(CellId c) const {
  if (!contains(c)) throw Error(Module::complex, "unknown cell id " + std::to_string(c));
}

std::size_t SimplicialComplex::count_of_dim(int q) const {
  if (q < 0 || q > max_dim()) return 0;
  return dim_begin_[q + 1] - dim_begin_[q];
}

int SimplicialComplex::dim(CellId c) const {
  require(c);
  return dim_[c];
}

std::span<const VertexId> SimplicialComplex::vertices(CellId c) const {
  require(c);
  return {vertex_data_.data() + vertex_offset_[c], vertex_data_.data() + vertex_offset_[c + 1]};
}

std::span<const CellId> SimplicialComplex::faces(CellId c) const {
  require(c);
  if (dim_[c] == 0) return {};
  return {face_data_.data() + vertex_offset_[c], face_data_.data() + vertex_offset_[c + 1]};
}

std::span<const CellId> SimplicialComplex::cofaces(CellId c) const {
  require(c);
  return {coface_data_.data() + coface_offset_[c], coface_data_.data() + coface_offset_[c + 1]};
}

int SimplicialComplex::kappa(CellId sigma, CellId tau) const {
  auto fs = faces(sigma);
  require(tau);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i] == tau) return incidence(i);
  }
  return 0;
}

std::optional<CellId> SimplicialComplex::find(std::span<const VertexId> sorted_vertices) const {
  if (sorted_vertices.empty()) return std::nullopt;
  const int q = static_cast<int>(sorted_vertices.size()) - 1;
  if (q > max_dim()) return std::nullopt;
  if (q == 0) {
    if (sorted_vertices[0] < vertex_count_) return sorted_vertices[0];
    return std::nullopt;
  }
  CellId lo = dim_begin_[q];
  CellId hi = dim_begin_[q + 1];
  auto less = [&](CellId c) {
    auto vs = vertices(c);
    return std::lexicographical_compare(vs.begin(), vs.end(), sorted_vertices.begin(),
                                        sorted_vertices.end());
  };
  while (lo < hi) {
    CellId mid = lo + (hi - lo) / 2;
    if (less(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < dim_begin_[q + 1]) {
    auto vs = vertices(lo);
    if (std::equal(vs.begin(), vs.end(), sorted_vertices.begin(), sorted_vertices.end())) return lo;
  }
  return std::nullopt;
}

bool SimplicialComplex::has_vertex(CellId sigma, VertexId v) const {
  auto vs = vertices(sigma);
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::optional<CellId> SimplicialComplex::join(VertexId v, CellId tau) const {
  if (has_vertex(tau, v)) return std::nullopt;
  for (CellId up : cofaces(tau)) {
    if (has_vertex(up, v)) return up;
  }
  return std::nullopt;
}

CellId SimplicialComplex::face_without(CellId sigma, VertexId v) const {
  auto vs = vertices(sigma);
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v || vs.size() < 2) {
    throw Error(Module::complex, "vertex " + std::to_string(v) + " has no opposite face in cell " +
                                     std::to_string(sigma));
  }
  return faces(sigma)[static_cast<std::size_t>(it - vs.begin())];
}

std::vector<CellId> SimplicialComplex::cofaces_closure(CellId tau) const {
  require(tau);
  std::vector<CellId> out;
  std::unordered_set<CellId> seen;
  std::deque<CellId> queue{tau};
  while (!queue.empty()) {
    CellId c = queue.front();
    queue.pop_front();
    for (CellId up : cofaces(c)) {
      if (seen.insert(up).second) {
        out.push_back(up);
        queue.push_back(up);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multimorse
