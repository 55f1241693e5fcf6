#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "multimorse/complex.hpp"
#include "multimorse/ring.hpp"

namespace mm = multimorse;
using mm::Grade;

TEST(GradeOrder, Comparable) {
  EXPECT_TRUE(mm::leq({0, 0}, {1, 1}));
  EXPECT_TRUE(mm::less({0, 0}, {1, 1}));
  EXPECT_TRUE(mm::leq_neq({0, 0}, {1, 1}));
}

TEST(GradeOrder, Incomparable) {
  EXPECT_FALSE(mm::leq({1, 0}, {0, 1}));
  EXPECT_FALSE(mm::leq({0, 1}, {1, 0}));
}

TEST(GradeOrder, SharedComponent) {
  EXPECT_TRUE(mm::leq({1, 0}, {1, 1}));
  EXPECT_FALSE(mm::less({1, 0}, {1, 1}));
  EXPECT_TRUE(mm::leq_neq({1, 0}, {1, 1}));
  EXPECT_FALSE(mm::leq_neq({1, 1}, {1, 1}));
}

TEST(GradeOrder, DimensionMismatchThrows) { EXPECT_THROW(mm::leq({1}, {1, 2}), mm::Error); }

TEST(Grade, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Grade(std::vector<double>{}), mm::Error);
  EXPECT_THROW(Grade({1.0, std::numeric_limits<double>::infinity()}), mm::Error);
}

TEST(Grade, TextRoundTrip) {
  Grade g{0.1, 1e-300, 2.5};
  EXPECT_EQ(mm::parse_grade(mm::to_string(g)), g);
  EXPECT_EQ(mm::to_string(Grade{1.5, 2}), "1.5,2");
}

TEST(CellGrade, VertexEdgeTriangle) {
  auto edge = fixtures::edge();
  auto f = fixtures::planar({{1, 0}, {0, 1}});
  EXPECT_EQ(mm::cell_grade(edge, f, 0), (Grade{1, 0}));
  EXPECT_EQ(mm::cell_grade(edge, f, 2), (Grade{1, 1}));

  auto tri = fixtures::full_triangle();
  EXPECT_EQ(mm::cell_grade(tri, fixtures::full_triangle_grades(), 6), (Grade{1, 1}));
}

TEST(Sublevel, TopAndBottomOfGrid) {
  auto s = fixtures::full_triangle();
  auto grades = mm::sublevel_filtration(s, fixtures::full_triangle_grades());
  auto top = mm::sublevel_membership(grades, {1, 1});
  auto below = mm::sublevel_membership(grades, {-1, -1});
  for (mm::CellId c = 0; c < s.size(); ++c) {
    EXPECT_TRUE(top(c));
    EXPECT_FALSE(below(c));
  }
}

TEST(Sublevel, TriangleBoundaryAtOneZero) {
  auto s = fixtures::triangle_boundary();
  auto grades = mm::sublevel_filtration(s, fixtures::triangle_boundary_grades());
  auto in = mm::sublevel_membership(grades, {1, 0});
  std::vector<mm::CellId> members;
  for (mm::CellId c = 0; c < s.size(); ++c) {
    if (in(c)) members.push_back(c);
  }
  EXPECT_EQ(members, (std::vector<mm::CellId>{0, 1, 3}));  // p0, p1, [p0,p1]
}

TEST(CriticalGrades, SingleVertex) {
  auto s = mm::SimplicialComplex::build(1, {});
  auto grades = mm::sublevel_filtration(s, fixtures::planar({{0, 0}}));
  EXPECT_EQ(mm::critical_grades(grades), (std::vector<Grade>{{0, 0}}));
}

TEST(CriticalGrades, TriangleBoundary) {
  auto s = fixtures::triangle_boundary();
  auto grades = mm::sublevel_filtration(s, fixtures::triangle_boundary_grades());
  auto grid = mm::critical_grades(grades);
  EXPECT_EQ(grid, (std::vector<Grade>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_LE(grid.size(), s.size());
}

TEST(Filtration, FacesEnterNoLaterThanCofaces) {
  auto s = fixtures::tetrahedron_boundary();
  auto f = fixtures::planar({{3, 0}, {1, 2}, {0, 0}, {2, 2}});
  auto grades = mm::sublevel_filtration(s, f);
  EXPECT_NO_THROW(mm::check_face_monotone(s.to_scomplex<mm::PrimeField>(), grades));
  std::vector<Grade> broken = grades.grades();
  broken[0] = {9, 9};
  EXPECT_THROW(mm::check_face_monotone(s.to_scomplex<mm::PrimeField>(), mm::FiltrationAssignment(broken)),
               mm::Error);
}

TEST(MeasuringFunction, RestrictKeepsOrder) {
  auto f = fixtures::planar({{0, 0}, {1, 0}, {2, 0}});
  std::vector<mm::VertexId> pick{2, 0};
  auto r = f.restrict(pick);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (Grade{2, 0}));
  EXPECT_EQ(r[1], (Grade{0, 0}));
}
