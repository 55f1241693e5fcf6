#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multimorse/grade.hpp"
#include "multimorse/mesh_io.hpp"
#include "multimorse/simplicial.hpp"

namespace multimorse::synthetic {

// Icosahedron refined by `levels` rounds of 1-to-4 midpoint subdivision,
// with vertices pushed to the unit sphere. Vertex degree stays <= 6.
MeshFile icosphere(int levels);

// Random simplicial complex on `vertex_count` vertices, built from random
// simplices of dimension <= max_dim until the next one would push the
// closure past max_cells.
SimplicialComplex random_complex(std::uint64_t seed, std::size_t vertex_count, int max_dim, std::size_t max_cells);

// Vertex grades with integer components drawn from [0, levels).
MeasuringFunction random_grades(std::uint64_t seed, std::size_t vertex_count, std::size_t k, int levels);

}  // namespace multimorse::synthetic
