#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "multimorse/grade.hpp"
#include "multimorse/simplicial.hpp"

namespace multimorse {

struct MeshFile {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<VertexId, 3>> triangles;
};

// OFF or ASCII OBJ, chosen by extension (".obj" is OBJ, anything else OFF).
// Faces must be triangles with three distinct in-range vertex indices.
MeshFile read_mesh(const std::filesystem::path& path);
MeshFile parse_off(std::istream& in);
MeshFile parse_obj(std::istream& in);
void write_off(std::ostream& out, const MeshFile& mesh);

SimplicialComplex to_complex(const MeshFile& mesh);

// f(v) = (|x|, |y|)
MeasuringFunction preset_abs_xy(const MeshFile& mesh);
MeasuringFunction preset(const std::string& name, const MeshFile& mesh);

// One line per vertex, k whitespace-separated decimals; line i is vertex i.
MeasuringFunction read_values(const std::filesystem::path& path, std::size_t vertex_count);
MeasuringFunction parse_values(std::istream& in, std::size_t vertex_count);

// Triangles within growing rings around a center vertex, stopping before
// the induced complex exceeds max_cells (the first ring is always kept).
struct Submesh {
  MeshFile mesh;
  std::vector<VertexId> original_vertex;  // submesh vertex -> mesh vertex
};

Submesh vertex_star_submesh(const MeshFile& mesh, VertexId center, std::size_t max_cells);

}  // namespace multimorse
