#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "multimorse/matching.hpp"
#include "multimorse/ring.hpp"

namespace mm = multimorse;
using mm::CellId;
using mm::CellRole;
using Ids = std::vector<CellId>;

namespace {

mm::MatchPartition run(const mm::SimplicialComplex& s, const mm::MeasuringFunction& f,
                       mm::LinkVariant variant = mm::LinkVariant::strict) {
  return mm::partition(s, f, mm::lex_indexing(f), {variant, 1});
}

TEST(LowerLink, MinimalVertexHasEmptyLink) {
  auto s = fixtures::triangle_boundary();
  EXPECT_TRUE(mm::lower_link(s, fixtures::triangle_boundary_grades(), 0).empty());
}

TEST(LowerLink, EdgeUpperEndpoint) {
  auto link = mm::lower_link(fixtures::edge(), fixtures::planar({{0, 0}, {1, 1}}), 1);
  EXPECT_EQ(link.cells, Ids{0});
  EXPECT_EQ(link.cones, Ids{2});
}

TEST(LowerLink, TriangleBoundary) {
  auto s = fixtures::triangle_boundary();
  auto f = fixtures::triangle_boundary_grades();
  EXPECT_EQ(mm::lower_link(s, f, 1).cells, Ids{0});
  EXPECT_EQ(mm::lower_link(s, f, 2).cells, Ids{0});
  EXPECT_EQ(mm::lower_link(s, f, 1).cones, Ids{3});
  EXPECT_EQ(mm::lower_link(s, f, 2).cones, Ids{4});
}

TEST(LowerLink, FullTriangleTopVertexSeesClosedEdge) {
  auto link = mm::lower_link(fixtures::full_triangle(), fixtures::full_triangle_grades(), 2);
  EXPECT_EQ(link.cells, (Ids{0, 1, 3}));
  EXPECT_EQ(link.cones, (Ids{4, 5, 6}));
}

TEST(WeakLowerLink, EqualGradesSeeEachOther) {
  auto s = fixtures::edge();
  auto f = fixtures::planar({{1, 1}, {1, 1}});
  EXPECT_TRUE(mm::lower_link(s, f, 0).empty());
  EXPECT_TRUE(mm::lower_link(s, f, 1).empty());
  EXPECT_EQ(mm::weak_lower_link(s, f, 0).cells, Ids{1});
  EXPECT_EQ(mm::weak_lower_link(s, f, 1).cells, Ids{0});
}

TEST(WeakLowerLink, AgreesWithStrictWhenAllComparisonsStrict) {
  auto s = fixtures::full_triangle();
  auto f = fixtures::full_triangle_grades();
  for (mm::VertexId v = 0; v < 3; ++v) {
    EXPECT_EQ(mm::weak_lower_link(s, f, v).cells, mm::lower_link(s, f, v).cells);
  }
}

TEST(Partition, SingleEdge) {
  auto p = run(fixtures::edge(), fixtures::planar({{0, 0}, {1, 1}}));
  EXPECT_EQ(p.a_cells(), Ids{1});
  EXPECT_EQ(p.b_cells(), Ids{2});
  EXPECT_EQ(p.c_cells(), Ids{0});
  EXPECT_EQ(p.mate(1), 2u);
}

TEST(Partition, TriangleBoundary) {
  auto p = run(fixtures::triangle_boundary(), fixtures::triangle_boundary_grades());
  EXPECT_EQ(p.a_cells(), (Ids{1, 2}));
  EXPECT_EQ(p.b_cells(), (Ids{3, 4}));
  EXPECT_EQ(p.c_cells(), (Ids{0, 5}));
  EXPECT_EQ(p.mate(1), 3u);
  EXPECT_EQ(p.mate(2), 4u);
}

TEST(Partition, FullTriangle) {
  auto p = run(fixtures::full_triangle(), fixtures::full_triangle_grades());
  EXPECT_EQ(p.c_cells(), Ids{0});
  EXPECT_EQ(p.mate(1), 3u);
  EXPECT_EQ(p.mate(2), 4u);
  EXPECT_EQ(p.mate(5), 6u);
  EXPECT_EQ(p.generation_order(), (Ids{1, 2, 5}));
}

TEST(Partition, IncomparablePathIsAllCritical) {
  auto p = run(fixtures::path3(), fixtures::path_grades());
  EXPECT_EQ(p.pair_count(), 0u);
  EXPECT_EQ(p.c_cells(), (Ids{0, 1, 2, 3, 4}));
}

TEST(Partition, WeakVariantPairsEqualGradedEdge) {
  auto s = fixtures::edge();
  auto f = fixtures::planar({{1, 1}, {1, 1}});
  EXPECT_EQ(run(s, f).pair_count(), 0u);
  auto weak = run(s, f, mm::LinkVariant::weak);
  EXPECT_EQ(weak.pair_count(), 1u);
  EXPECT_EQ(weak.c_cells(), Ids{0});
  EXPECT_FALSE(mm::find_matching_violation(s, mm::sublevel_filtration(s, f), weak).has_value());
}

TEST(Partition, ThreadedMatchesSequential) {
  auto s = fixtures::tetrahedron_boundary();
  auto f = fixtures::planar({{0, 0}, {1, 0}, {0, 1}, {2, 2}});
  auto index = mm::lex_indexing(f);
  EXPECT_EQ(mm::partition(s, f, index, {mm::LinkVariant::strict, 3}), mm::partition(s, f, index, {}));
}

TEST(Partition, RejectsIncompatibleIndexing) {
  auto f = fixtures::planar({{0, 0}, {1, 1}});
  EXPECT_THROW(mm::partition(fixtures::edge(), f, mm::IndexingMap({1, 0})), mm::Error);
}

TEST(MatchPartition, DoubleClassificationThrows) {
  mm::MatchPartition p(3);
  p.add_pair(0, 2);
  EXPECT_THROW(p.add_critical(2), mm::Error);
  EXPECT_THROW(p.add_pair(0, 1), mm::Error);
}

TEST(MaxIndex, VertexAndSimplex) {
  auto s = fixtures::full_triangle();
  mm::IndexingMap index({2, 0, 1});
  EXPECT_EQ(mm::max_index(s, index, 0), 2u);
  EXPECT_EQ(mm::max_index(s, index, 5), 1u);
  EXPECT_EQ(mm::max_index(s, index, 6), 2u);
}

TEST(ModifiedHasse, EmptyMatchingIsPlainDiagram) {
  auto s = fixtures::full_triangle();
  mm::MatchPartition p(s.size());
  auto g = mm::modified_hasse(s, p);
  EXPECT_EQ(g.edge_count, 9u);
  EXPECT_EQ(g.reversed_count, 0u);
  EXPECT_TRUE(mm::is_acyclic(g));
}

TEST(ModifiedHasse, SingleMatchedEdge) {
  auto s = fixtures::edge();
  auto g = mm::modified_hasse(s, run(s, fixtures::planar({{0, 0}, {1, 1}})));
  EXPECT_EQ(g.reversed_count, 1u);
  EXPECT_EQ(g.out[1], Ids{2});
}

TEST(ModifiedHasse, TriangleBoundaryCounts) {
  auto s = fixtures::triangle_boundary();
  auto g = mm::modified_hasse(s, run(s, fixtures::triangle_boundary_grades()));
  EXPECT_EQ(g.edge_count, 6u);
  EXPECT_EQ(g.reversed_count, 2u);
  EXPECT_TRUE(mm::is_acyclic(g));
}

TEST(ModifiedHasse, GenericFormAgrees) {
  auto s = fixtures::full_triangle();
  auto p = run(s, fixtures::full_triangle_grades());
  auto a = mm::modified_hasse(s, p);
  auto b = mm::modified_hasse(s.to_scomplex<mm::PrimeField>(), p);
  EXPECT_EQ(a.edge_count, b.edge_count);
  EXPECT_EQ(a.reversed_count, b.reversed_count);
}

TEST(IsAcyclic, VPathLoop) {
  mm::Digraph g;
  g.out = {{1}, {2}, {3}, {0}};
  EXPECT_FALSE(mm::is_acyclic(g));
  g.out[3].clear();
  EXPECT_TRUE(mm::is_acyclic(g));
}

TEST(MatchingViolation, DetectsBrokenPairs) {
  auto s = fixtures::triangle_boundary();
  auto grades = mm::sublevel_filtration(s, fixtures::triangle_boundary_grades());

  mm::MatchPartition incomplete(s.size());
  incomplete.add_pair(1, 3);
  EXPECT_TRUE(mm::find_matching_violation(s, grades, incomplete).has_value());

  mm::MatchPartition not_a_face(s.size());
  not_a_face.add_pair(0, 5);
  for (CellId c : {1, 2, 3, 4}) not_a_face.add_critical(c);
  EXPECT_TRUE(mm::find_matching_violation(s, grades, not_a_face).has_value());

  // p0 paired into [p0,p1] enters later than p0, breaking compatibility.
  mm::MatchPartition late(s.size());
  late.add_pair(0, 3);
  for (CellId c : {1, 2, 4, 5}) late.add_critical(c);
  EXPECT_TRUE(mm::find_matching_violation(s, grades, late).has_value());
}

TEST(MatchingViolation, DetectsCycle) {
  // Circle with every vertex paired to the next edge forms a closed V-path.
  auto s = fixtures::triangle_boundary();
  auto flat = fixtures::planar({{0, 0}, {0, 0}, {0, 0}});
  auto grades = mm::sublevel_filtration(s, flat);
  mm::MatchPartition p(s.size());
  p.add_pair(0, 3);
  p.add_pair(1, 5);
  p.add_pair(2, 4);
  auto violation = mm::find_matching_violation(s, grades, p);
  ASSERT_TRUE(violation.has_value());
  EXPECT_NE(violation->find("cycl"), std::string::npos) << *violation;
}

}  // namespace
