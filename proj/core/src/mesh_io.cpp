#include "multimorse/mesh_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace multimorse {

namespace {

// Next non-empty line with '#' comments stripped.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(Module::io, "line " + std::to_string(line_no) + ": " + what);
}

std::array<VertexId, 3> checked_triangle(std::array<long long, 3> idx, std::size_t vertex_count,
                                         std::size_t line_no) {
  std::array<VertexId, 3> t{};
  for (int i = 0; i < 3; ++i) {
    if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= vertex_count) {
      fail(line_no, "vertex index " + std::to_string(idx[i]) + " out of range");
    }
    t[i] = static_cast<VertexId>(idx[i]);
  }
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) fail(line_no, "triangle repeats a vertex");
  return t;
}

}  // namespace

MeshFile read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Module::io, "cannot open mesh file " + path.string());
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  try {
    return ext == ".obj" ? parse_obj(in) : parse_off(in);
  } catch (const Error& e) {
    throw Error(Module::io, path.string() + ": " + std::string(e.what()).substr(module_name(Module::io).size() + 2));
  }
}

MeshFile parse_off(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) fail(line_no, "empty file, expected OFF header");
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF") fail(line_no, "malformed header, expected 'OFF'");
  long long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv)) {
    if (!next_content_line(in, line, line_no)) fail(line_no, "missing element counts");
    header = std::istringstream(line);
    header >> nv;
  }
  if (!(header >> nf) || nv < 0 || nf < 0) fail(line_no, "malformed header counts");
  header >> ne;

  MeshFile mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    if (!next_content_line(in, line, line_no)) fail(line_no, "unexpected end of file in vertex list");
    std::istringstream ls(line);
    std::array<double, 3> p{};
    if (!(ls >> p[0] >> p[1] >> p[2])) fail(line_no, "malformed vertex");
    mesh.vertices.push_back(p);
  }
  mesh.triangles.reserve(static_cast<std::size_t>(nf));
  for (long long i = 0; i < nf; ++i) {
    if (!next_content_line(in, line, line_no)) fail(line_no, "unexpected end of file in face list");
    std::istringstream ls(line);
    long long n = 0;
    if (!(ls >> n)) fail(line_no, "malformed face");
    if (n != 3) fail(line_no, "non-triangle face with " + std::to_string(n) + " vertices");
    std::array<long long, 3> idx{};
    if (!(ls >> idx[0] >> idx[1] >> idx[2])) fail(line_no, "malformed face");
    mesh.triangles.push_back(checked_triangle(idx, mesh.vertices.size(), line_no));
  }
  return mesh;
}

MeshFile parse_obj(std::istream& in) {
  MeshFile mesh;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<std::array<long long, 3>, std::size_t>> faces;
  while (next_content_line(in, line, line_no)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      std::array<double, 3> p{};
      if (!(ls >> p[0] >> p[1] >> p[2])) fail(line_no, "malformed vertex");
      mesh.vertices.push_back(p);
    } else if (tag == "f") {
      std::vector<long long> idx;
      std::string token;
      while (ls >> token) {
        // "i", "i/t", "i//n", "i/t/n"; negative indices are relative
        long long v = 0;
        try {
          v = std::stoll(token.substr(0, token.find('/')));
        } catch (const std::exception&) {
          fail(line_no, "malformed face index '" + token + "'");
        }
        if (v < 0) v = static_cast<long long>(mesh.vertices.size()) + v + 1;
        idx.push_back(v - 1);
      }
      if (idx.size() != 3) fail(line_no, "non-triangle face with " + std::to_string(idx.size()) + " vertices");
      faces.push_back({{idx[0], idx[1], idx[2]}, line_no});
    }
  }
  for (const auto& [idx, at] : faces) mesh.triangles.push_back(checked_triangle(idx, mesh.vertices.size(), at));
  return mesh;
}

void write_off(std::ostream& out, const MeshFile& mesh) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  out.precision(17);
  for (const auto& p : mesh.vertices) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

SimplicialComplex to_complex(const MeshFile& mesh) {
  std::vector<std::vector<VertexId>> simplices;
  simplices.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) simplices.push_back({t[0], t[1], t[2]});
  return SimplicialComplex::build(mesh.vertices.size(), simplices);
}

MeasuringFunction preset_abs_xy(const MeshFile& mesh) {
  std::vector<Grade> values;
  values.reserve(mesh.vertices.size());
  for (const auto& p : mesh.vertices) values.push_back(Grade{std::fabs(p[0]), std::fabs(p[1])});
  return MeasuringFunction(2, std::move(values));
}

MeasuringFunction preset(const std::string& name, const MeshFile& mesh) {
  if (name == "abs-xy") return preset_abs_xy(mesh);
  throw Error(Module::io, "unknown preset '" + name + "'");
}

MeasuringFunction read_values(const std::filesystem::path& path, std::size_t vertex_count) {
  std::ifstream in(path);
  if (!in) throw Error(Module::io, "cannot open values file " + path.string());
  return parse_values(in, vertex_count);
}

MeasuringFunction parse_values(std::istream& in, std::size_t vertex_count) {
  std::vector<Grade> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t k = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<double> c;
    std::string token;
    while (ls >> token) {
      try {
        std::size_t used = 0;
        c.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        fail(line_no, "malformed value '" + token + "'");
      }
    }
    if (k == 0) k = c.size();
    if (c.size() != k) fail(line_no, "expected " + std::to_string(k) + " values");
    values.emplace_back(std::move(c));
  }
  if (values.size() != vertex_count) {
    throw Error(Module::io, "values file has " + std::to_string(values.size()) + " lines for " +
                                std::to_string(vertex_count) + " vertices");
  }
  if (vertex_count == 0) return MeasuringFunction(1, {});
  return MeasuringFunction(k, std::move(values));
}

Submesh vertex_star_submesh(const MeshFile& mesh, VertexId center, std::size_t max_cells) {
  if (center >= mesh.vertices.size()) throw Error(Module::io, "submesh center out of range");
  std::vector<std::vector<std::size_t>> incident(mesh.vertices.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    for (VertexId v : mesh.triangles[t]) incident[v].push_back(t);
  }

  auto cell_count = [&](const std::set<std::size_t>& tris, const std::set<VertexId>& verts) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (std::size_t t : tris) {
      auto tri = mesh.triangles[t];
      std::sort(tri.begin(), tri.end());
      edges.insert({tri[0], tri[1]});
      edges.insert({tri[0], tri[2]});
      edges.insert({tri[1], tri[2]});
    }
    return verts.size() + edges.size() + tris.size();
  };

  std::set<VertexId> verts{center};
  std::set<std::size_t> tris;
  for (int ring = 0;; ++ring) {
    std::set<std::size_t> next_tris = tris;
    std::set<VertexId> next_verts = verts;
    for (VertexId v : verts) {
      for (std::size_t t : incident[v]) {
        next_tris.insert(t);
        for (VertexId w : mesh.triangles[t]) next_verts.insert(w);
      }
    }
    if (next_tris.size() == tris.size()) break;
    if (ring > 0 && cell_count(next_tris, next_verts) > max_cells) break;
    tris = std::move(next_tris);
    verts = std::move(next_verts);
  }

  Submesh out;
  std::map<VertexId, VertexId> local;
  for (VertexId v : verts) {
    local.emplace(v, static_cast<VertexId>(out.original_vertex.size()));
    out.original_vertex.push_back(v);
    out.mesh.vertices.push_back(mesh.vertices[v]);
  }
  for (std::size_t t : tris) {
    const auto& tri = mesh.triangles[t];
    out.mesh.triangles.push_back({local.at(tri[0]), local.at(tri[1]), local.at(tri[2])});
  }
  return out;
}

}  // namespace multimorse
