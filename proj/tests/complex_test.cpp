#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "multimorse/complex.hpp"
#include "multimorse/mesh_io.hpp"
#include "multimorse/ring.hpp"
#include "multimorse/synthetic.hpp"

namespace mm = multimorse;
using mm::CellId;

namespace {

TEST(PrimeField, ArithmeticModP) {
  mm::PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.mul(f.inverse(3), 3), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_THROW(mm::PrimeField(8), mm::Error);
  EXPECT_THROW(f.divide(1, 0), mm::Error);
}

TEST(Rationals, ExactDivisionAndParse) {
  mm::Rationals q;
  auto x = q.divide(q.from_int(1), q.from_int(3));
  EXPECT_TRUE(q.equal(q.mul(x, q.from_int(3)), q.one()));
  EXPECT_EQ(q.to_string(x), "1/3");
  EXPECT_TRUE(q.equal(q.parse("-2/4"), q.divide(q.from_int(-1), q.from_int(2))));
}

TEST(Integers, UnitsAreSigns) {
  mm::Integers z;
  EXPECT_TRUE(z.is_unit(z.from_int(-1)));
  EXPECT_FALSE(z.is_unit(z.from_int(2)));
  EXPECT_TRUE(z.equal(z.divide(z.from_int(6), z.from_int(-3)), z.from_int(-2)));
  EXPECT_THROW(z.divide(z.from_int(1), z.from_int(2)), mm::Error);
}

TEST(SimplicialComplex, SingleTriangleCellsAndSigns) {
  auto s = fixtures::full_triangle();
  EXPECT_EQ(s.size(), 7u);
  EXPECT_EQ(s.count_of_dim(0), 3u);
  EXPECT_EQ(s.count_of_dim(1), 3u);
  EXPECT_EQ(s.count_of_dim(2), 1u);
  const CellId face = 6;
  std::vector<mm::VertexId> e12{1, 2}, e02{0, 2}, e01{0, 1};
  EXPECT_EQ(s.kappa(face, *s.find(e12)), 1);
  EXPECT_EQ(s.kappa(face, *s.find(e02)), -1);
  EXPECT_EQ(s.kappa(face, *s.find(e01)), 1);
}

TEST(SimplicialComplex, EdgeBoundaryIsBMinusA) {
  auto s = fixtures::edge().to_scomplex<mm::Integers>();
  auto d = s.boundary(2);
  mm::Integers z;
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(z.equal(d.coefficient(z, 1), z.one()));
  EXPECT_TRUE(z.equal(d.coefficient(z, 0), z.from_int(-1)));
}

TEST(SimplicialComplex, EmptyInput) {
  auto s = mm::SimplicialComplex::build(0, {});
  EXPECT_EQ(s.size(), 0u);
  EXPECT_EQ(s.max_dim(), -1);
  auto sc = s.to_scomplex<mm::PrimeField>();
  EXPECT_EQ(sc.cell_count(), 0u);
  EXPECT_NO_THROW(sc.check_invariants());
}

TEST(SimplicialComplex, RejectsBadSimplices) {
  EXPECT_THROW(mm::SimplicialComplex::build(2, {{0, 2}}), mm::Error);
  EXPECT_THROW(mm::SimplicialComplex::build(2, {{1, 1}}), mm::Error);
}

TEST(SComplex, BoundaryOfVertexIsZero) {
  auto s = fixtures::full_triangle().to_scomplex<mm::Integers>();
  EXPECT_TRUE(s.boundary(0).empty());
}

TEST(SComplex, TriangleBoundaryFormula) {
  mm::Integers z;
  auto s = fixtures::full_triangle().to_scomplex<mm::Integers>();
  mm::Chain<mm::Integers> expected;
  expected.add(z, 5, z.one());           // [1,2]
  expected.add(z, 4, z.from_int(-1));    // [0,2]
  expected.add(z, 3, z.one());           // [0,1]
  EXPECT_EQ(s.boundary(6), expected);
}

TEST(SComplex, BoundaryOfBoundaryVanishesOnRandomComplexes) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = mm::synthetic::random_complex(seed, 9, 3, 300);
    auto sc = s.to_scomplex<mm::Integers>();
    for (CellId c : sc.cells()) {
      auto dd = sc.boundary(sc.boundary(c));
      EXPECT_TRUE(dd.empty()) << "seed " << seed << " cell " << c;
    }
    EXPECT_NO_THROW(sc.check_invariants());
  }
}

TEST(SComplex, PrimaryFacesAndCofaces) {
  auto s = fixtures::full_triangle().to_scomplex<mm::PrimeField>();
  EXPECT_TRUE(s.primary_faces(0).empty());
  EXPECT_EQ(s.primary_cofaces(3), std::vector<CellId>{6});
  EXPECT_TRUE(s.primary_cofaces(6).empty());

  auto two = mm::SimplicialComplex::build(4, {{0, 1, 2}, {1, 2, 3}}).to_scomplex<mm::PrimeField>();
  // [1,2] is shared by both triangles
  std::vector<mm::VertexId> shared{1, 2};
  auto id = *mm::SimplicialComplex::build(4, {{0, 1, 2}, {1, 2, 3}}).find(shared);
  EXPECT_EQ(two.primary_cofaces(id).size(), 2u);
}

TEST(SComplex, CofacesClosureOfVertex) {
  auto s = fixtures::full_triangle();
  EXPECT_EQ(s.to_scomplex<mm::PrimeField>().cofaces_closure(0), (std::vector<CellId>{3, 4, 6}));
  auto closure = s.cofaces_closure(0);
  std::sort(closure.begin(), closure.end());
  EXPECT_EQ(closure, (std::vector<CellId>{3, 4, 6}));
}

TEST(SComplex, CofaceClosureBoundedByVertexDegree) {
  // On a closed surface the star of a vertex of degree g has 2g cells.
  auto mesh = mm::synthetic::icosphere(2);
  auto s = mm::to_complex(mesh);
  for (mm::VertexId v = 0; v < s.vertex_count(); ++v) {
    std::size_t degree = s.cofaces(v).size();
    EXPECT_LE(degree, 6u);
    EXPECT_EQ(s.cofaces_closure(v).size(), 2 * degree);
  }
}

TEST(SComplex, SetKappaEnforcesDimensionRule) {
  mm::SComplex<mm::PrimeField> s;
  auto a = s.add_cell(0);
  auto b = s.add_cell(2);
  EXPECT_THROW(s.set_kappa(b, a, 1), mm::Error);
  auto e = s.add_cell(1);
  s.set_kappa(e, a, 1);
  EXPECT_EQ(s.kappa(e, a), 1u);
  s.set_kappa(e, a, 0);
  EXPECT_TRUE(s.faces(e).empty());
  EXPECT_TRUE(s.cofaces(a).empty());
}

TEST(SComplex, RemovedCellsKeepIdsStable) {
  auto s = fixtures::full_triangle().to_scomplex<mm::PrimeField>();
  s.remove_cell(6);
  EXPECT_FALSE(s.contains(6));
  EXPECT_EQ(s.id_bound(), 7u);
  EXPECT_EQ(s.cell_count(), 6u);
  EXPECT_TRUE(s.cofaces(3).empty());
  EXPECT_THROW(s.dim(6), mm::Error);
}

}  // namespace
