#include <gtest/gtest.h>

#include "multimorse/matching.hpp"
#include "multimorse/mesh_io.hpp"
#include "multimorse/reduction.hpp"
#include "multimorse/synthetic.hpp"

namespace mm = multimorse;
using mm::CellId;

namespace {

struct Case {
  std::uint64_t seed;
  mm::LinkVariant variant;
};

class RandomMatching : public ::testing::TestWithParam<Case> {};

TEST_P(RandomMatching, InvariantsHold) {
  const auto [seed, variant] = GetParam();
  auto s = mm::synthetic::random_complex(seed, 10, 3, 300);
  auto f = mm::synthetic::random_grades(seed ^ 0x5eed, s.vertex_count(), 2, 4);
  auto index = mm::lex_indexing(f);
  auto p = mm::partition(s, f, index, {variant, 1});
  auto grades = mm::sublevel_filtration(s, f);

  auto violation = mm::find_matching_violation(s, grades, p);
  ASSERT_FALSE(violation.has_value()) << *violation;
  EXPECT_EQ(p.a_cells().size() + p.b_cells().size() + p.c_cells().size(), s.size());

  for (CellId t = 0; t < s.size(); ++t) {
    for (CellId face : s.faces(t)) EXPECT_LE(mm::max_index(s, index, face), mm::max_index(s, index, t));
  }
  for (CellId a : p.a_cells()) EXPECT_EQ(mm::max_index(s, index, a), mm::max_index(s, index, p.mate(a)));

  // The matching restricted to each intermediate complex stays acyclic.
  auto complex = s.to_scomplex<mm::PrimeField>();
  std::size_t steps = 0;
  for (CellId lower : mm::reduction_sequence(complex, p, mm::ReductionOrder::generation)) {
    if (steps++ == 50) break;
    mm::reduce_pair(complex, lower, p.mate(lower));
    ASSERT_TRUE(mm::is_acyclic(mm::modified_hasse(complex, p))) << "after step " << steps;
  }
}

std::vector<Case> cases() {
  std::vector<Case> out;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    out.push_back({seed, mm::LinkVariant::strict});
    out.push_back({seed, mm::LinkVariant::weak});
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatching, ::testing::ValuesIn(cases()), [](const auto& info) {
  return std::string(info.param.variant == mm::LinkVariant::weak ? "weak" : "strict") + "_" +
         std::to_string(info.param.seed);
});

TEST(RandomMatching, SphereMeshWithRealGrades) {
  auto mesh = mm::synthetic::icosphere(3);
  auto s = mm::to_complex(mesh);
  auto f = mm::preset_abs_xy(mesh);
  for (auto variant : {mm::LinkVariant::strict, mm::LinkVariant::weak}) {
    auto p = mm::partition(s, f, mm::topo_sort_kahn(mm::build_dag(f)), {variant, 1});
    auto violation = mm::find_matching_violation(s, mm::sublevel_filtration(s, f), p);
    EXPECT_FALSE(violation.has_value()) << *violation;
    EXPECT_GT(p.pair_count(), 0u);
  }
}

}  // namespace
