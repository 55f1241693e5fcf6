#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "multimorse/indexing.hpp"

namespace mm = multimorse;

namespace {

std::set<std::pair<mm::VertexId, mm::VertexId>> edges(const mm::ComparabilityDag& dag) {
  std::set<std::pair<mm::VertexId, mm::VertexId>> out;
  for (mm::VertexId u = 0; u < dag.node_count(); ++u) {
    for (auto w : dag.successors[u]) out.emplace(u, w);
  }
  return out;
}

TEST(ComparabilityDag, TwoVertices) {
  EXPECT_EQ(mm::build_dag(fixtures::planar({{0, 0}, {1, 1}})).edge_count(), 1u);
  EXPECT_EQ(mm::build_dag(fixtures::planar({{1, 0}, {0, 1}})).edge_count(), 0u);
}

TEST(ComparabilityDag, TransitiveTriangle) {
  auto dag = mm::build_dag(fixtures::full_triangle_grades());
  using E = std::pair<mm::VertexId, mm::VertexId>;
  EXPECT_EQ(edges(dag), (std::set<E>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(dag.in_degree, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Kahn, EmptyGraphKeepsInputOrder) {
  auto index = mm::topo_sort_kahn(mm::build_dag(fixtures::planar({{2, 0}, {1, 1}, {0, 2}})));
  EXPECT_EQ(index.indices(), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Kahn, ChainHasUniqueExtension) {
  auto index = mm::topo_sort_kahn(mm::build_dag(fixtures::full_triangle_grades()));
  EXPECT_EQ(index.indices(), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Kahn, ChainGivenOutOfOrder) {
  auto index = mm::topo_sort_kahn(mm::build_dag(fixtures::planar({{1, 1}, {0, 0}, {1, 0}})));
  EXPECT_EQ(index.order(), (std::vector<mm::VertexId>{1, 2, 0}));
}

TEST(Kahn, CycleIsReported) {
  mm::ComparabilityDag dag;
  dag.successors = {{1}, {0}};
  dag.in_degree = {1, 1};
  EXPECT_THROW(mm::topo_sort_kahn(dag), mm::Error);
}

TEST(LexIndexing, IncomparablePairPutsSmallerFirstComponentFirst) {
  auto index = mm::lex_indexing(fixtures::planar({{1, 0}, {0, 1}}));
  EXPECT_EQ(index.order(), (std::vector<mm::VertexId>{1, 0}));
}

TEST(LexIndexing, EqualGradesOrderedById) {
  auto index = mm::lex_indexing(fixtures::planar({{1, 1}, {0, 0}, {1, 1}}));
  EXPECT_EQ(index.order(), (std::vector<mm::VertexId>{1, 0, 2}));
}

TEST(ValidateIndexing, ChainIdentityAndReverse) {
  auto f = fixtures::full_triangle_grades();
  EXPECT_TRUE(mm::validate_indexing(f, mm::IndexingMap({0, 1, 2})));
  EXPECT_FALSE(mm::validate_indexing(f, mm::IndexingMap({2, 1, 0})));
}

TEST(ValidateIndexing, AntichainNeedsOnlyInjectivity) {
  auto f = fixtures::path_grades();
  EXPECT_TRUE(mm::validate_indexing(f, mm::IndexingMap({2, 0, 1})));
  EXPECT_FALSE(mm::validate_indexing(f, mm::IndexingMap({0, 0, 1})));
}

TEST(ValidateIndexing, RandomGradeSets) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 120;
    std::size_t k = 1 + rng() % 4;
    std::vector<mm::Grade> values;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<double> g(k);
      for (double& x : g) x = static_cast<double>(rng() % 5);
      values.emplace_back(g);
    }
    mm::MeasuringFunction f(k, values);
    auto dag = mm::build_dag(f);
    EXPECT_NO_THROW(mm::topo_sort_kahn(dag));
    EXPECT_TRUE(mm::validate_indexing(f, mm::topo_sort_kahn(dag))) << "trial " << trial;
    EXPECT_TRUE(mm::validate_indexing(f, mm::lex_indexing(f))) << "trial " << trial;
  }
}

}  // namespace
