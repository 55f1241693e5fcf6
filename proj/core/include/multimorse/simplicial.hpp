#pragma once

#include <optional>
#include <span>
#include <vector>

#include "multimorse/complex.hpp"

namespace multimorse {

// Abstract simplicial complex on vertices [0, vertex_count). Vertex v is
// cell v; higher simplices follow, grouped by dimension and sorted
// lexicographically inside each group. The i-th stored face of a q-simplex
// omits its i-th vertex and carries incidence (-1)^i.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Closes the given simplices under faces. Every vertex in [0, vertex_count)
  // becomes a cell, referenced or not.
  static SimplicialComplex build(std::size_t vertex_count,
                                 const std::vector<std::vector<VertexId>>& maximal_simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t size() const noexcept { return dim_.size(); }
  int max_dim() const noexcept { return static_cast<int>(dim_begin_.size()) - 2; }
  std::size_t count_of_dim(int q) const;

  bool contains(CellId c) const noexcept { return c < dim_.size(); }
  int dim(CellId c) const;
  std::span<const VertexId> vertices(CellId c) const;
  std::span<const CellId> faces(CellId c) const;
  std::span<const CellId> cofaces(CellId c) const;

  static int incidence(std::size_t face_position) noexcept { return face_position % 2 == 0 ? 1 : -1; }
  // kappa(sigma, tau) in {-1, 0, 1}
  int kappa(CellId sigma, CellId tau) const;

  // Cell with exactly these (sorted) vertices.
  std::optional<CellId> find(std::span<const VertexId> sorted_vertices) const;
  // The join v * tau, if it is a simplex of the complex.
  std::optional<CellId> join(VertexId v, CellId tau) const;
  // The facet of sigma that omits vertex v; v must be a vertex of sigma.
  CellId face_without(CellId sigma, VertexId v) const;
  bool has_vertex(CellId sigma, VertexId v) const;

  std::vector<CellId> cofaces_closure(CellId tau) const;

  template <class Ring>
  SComplex<Ring> to_scomplex(Ring ring = Ring{}) const {
    SComplex<Ring> out(ring);
    for (CellId c = 0; c < size(); ++c) out.add_cell(dim(c));
    for (CellId c = 0; c < size(); ++c) {
      auto fs = faces(c);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        out.set_kappa(c, fs[i], out.ring().from_int(incidence(i)));
      }
    }
    return out;
  }

 private:
  void require(CellId c) const;

  std::size_t vertex_count_ = 0;
  std::vector<int> dim_;
  std::vector<CellId> dim_begin_;  // first id of each dimension, plus end sentinel
  std::vector<std::uint32_t> vertex_offset_;
  std::vector<VertexId> vertex_data_;
  std::vector<std::uint32_t> coface_offset_;
  std::vector<CellId> coface_data_;
  std::vector<CellId> face_data_;  // shares vertex_offset_ for q >= 1 cells
};

}  // namespace multimorse
