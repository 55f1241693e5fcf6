#pragma once

#include <initializer_list>
#include <vector>

#include "multimorse/grade.hpp"
#include "multimorse/simplicial.hpp"

namespace fixtures {

using multimorse::CellId;
using multimorse::Grade;
using multimorse::MeasuringFunction;
using multimorse::SimplicialComplex;

inline MeasuringFunction planar(std::initializer_list<Grade> grades) {
  return MeasuringFunction(2, std::vector<Grade>(grades));
}

inline SimplicialComplex edge() { return SimplicialComplex::build(2, {{0, 1}}); }

// Cells: p0 p1 p2 | [0,1]=3 [0,2]=4 [1,2]=5
inline SimplicialComplex triangle_boundary() { return SimplicialComplex::build(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Cells: p0 p1 p2 | [0,1]=3 [0,2]=4 [1,2]=5 | [0,1,2]=6
inline SimplicialComplex full_triangle() { return SimplicialComplex::build(3, {{0, 1, 2}}); }

// Cells: p0 p1 p2 | [0,1]=3 [1,2]=4
inline SimplicialComplex path3() { return SimplicialComplex::build(3, {{0, 1}, {1, 2}}); }

inline SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline MeasuringFunction triangle_boundary_grades() { return planar({{0, 0}, {1, 0}, {0, 1}}); }
inline MeasuringFunction full_triangle_grades() { return planar({{0, 0}, {1, 0}, {1, 1}}); }
inline MeasuringFunction path_grades() { return planar({{0, 2}, {1, 1}, {2, 0}}); }

}  // namespace fixtures
