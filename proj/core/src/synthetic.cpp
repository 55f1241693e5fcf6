#include "multimorse/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace multimorse::synthetic {

MeshFile icosphere(int levels) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  MeshFile mesh;
  mesh.vertices = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
                   {0, -1, -t}, {0, 1, -t}, {t, 0, -1},  {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  mesh.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                    {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                    {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  auto normalize = [](std::array<double, 3>& p) {
    double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (double& x : p) x /= n;
  };
  for (auto& p : mesh.vertices) normalize(p);

  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<VertexId, VertexId>, VertexId> midpoint;
    auto mid = [&](VertexId a, VertexId b) {
      auto key = std::minmax(a, b);
      auto [it, inserted] = midpoint.try_emplace({key.first, key.second}, 0);
      if (inserted) {
        std::array<double, 3> p;
        for (int i = 0; i < 3; ++i) p[i] = (mesh.vertices[a][i] + mesh.vertices[b][i]) / 2;
        normalize(p);
        it->second = static_cast<VertexId>(mesh.vertices.size());
        mesh.vertices.push_back(p);
      }
      return it->second;
    };
    std::vector<std::array<VertexId, 3>> next;
    next.reserve(mesh.triangles.size() * 4);
    for (const auto& [a, b, c] : mesh.triangles) {
      VertexId ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.triangles = std::move(next);
  }
  return mesh;
}

SimplicialComplex random_complex(std::uint64_t seed, std::size_t vertex_count, int max_dim, std::size_t max_cells) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_dim(1, std::max(1, max_dim));
  std::vector<VertexId> all(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) all[v] = v;

  std::set<std::vector<VertexId>> closure;
  for (VertexId v = 0; v < vertex_count; ++v) closure.insert({v});
  std::vector<std::vector<VertexId>> simplices;
  for (int attempt = 0; attempt < 200; ++attempt) {
    int d = std::min<int>(pick_dim(rng), static_cast<int>(vertex_count) - 1);
    if (d < 1) break;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<VertexId> s(all.begin(), all.begin() + d + 1);
    std::sort(s.begin(), s.end());

    std::vector<std::vector<VertexId>> fresh;
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      if (!closure.count(face)) fresh.push_back(std::move(face));
    }
    if (closure.size() + fresh.size() > max_cells) break;
    closure.insert(fresh.begin(), fresh.end());
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::build(vertex_count, simplices);
}

MeasuringFunction random_grades(std::uint64_t seed, std::size_t vertex_count, std::size_t k, int levels) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, levels - 1);
  std::vector<Grade> values;
  values.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::vector<double> g(k);
    for (double& x : g) x = pick(rng);
    values.emplace_back(std::move(g));
  }
  return MeasuringFunction(k, std::move(values));
}

}  // namespace multimorse::synthetic
