#include <gtest/gtest.h>

#include "blockrank/blocks.hpp"
#include "blockrank/error.hpp"
#include "blockrank/families.hpp"
#include "blockrank/fixtures.hpp"
#include "blockrank/generators.hpp"
#include "blockrank/text_format.hpp"
#include "support/oracle.hpp"

using namespace blockrank;

namespace {

WeightedDigraph simple(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    arcs.push_back({u, v, 1});
    arcs.push_back({v, u, 1});
  }
  return WeightedDigraph::build(n, arcs);
}

}  // namespace

TEST(Simple, Predicate) {
  EXPECT_TRUE(is_simple(simple(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_simple(WeightedDigraph::build(2, {{0, 1, 1}})));
  EXPECT_FALSE(is_simple(WeightedDigraph::build(2, {{0, 1, 1}, {1, 0, 2}})));
  EXPECT_FALSE(is_simple(with_loop(simple(2, {{0, 1}}), 0, 1)));
}

TEST(Bipartition, Examples) {
  const WeightedDigraph c4 = simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const std::vector<VertexId> all{0, 1, 2, 3};
  const auto p = complete_bipartition(underlying_simple_graph(c4), all);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->left, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(p->right, (std::vector<VertexId>{1, 3}));
  const WeightedDigraph k3 = simple(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(complete_bipartition(underlying_simple_graph(k3), std::vector<VertexId>{0, 1, 2}));
  const WeightedDigraph p4 = simple(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(complete_bipartition(underlying_simple_graph(p4), all));
}

TEST(BlockGraphs, Predicates) {
  const WeightedDigraph two_triangles = simple(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_TRUE(is_block_graph(two_triangles));
  EXPECT_FALSE(is_biblock_graph(two_triangles));
  EXPECT_FALSE(is_r2_block_graph(two_triangles));
  const WeightedDigraph c4 = simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_FALSE(is_block_graph(c4));
  EXPECT_TRUE(is_biblock_graph(c4));

  // Two triangles with a pendant edge at the shared vertex.
  const WeightedDigraph r2 = simple(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {2, 5}});
  EXPECT_TRUE(is_r2_block_graph(r2));
  EXPECT_TRUE(r2_block_graph_hypothesis(r2));
  EXPECT_EQ(rank_r2_block_graph(r2).rank, 6U);
  EXPECT_EQ(oracle::rank(r2), 6U);
}

TEST(BlockGraphs, ExamplesBreakingTheHypothesis) {
  // Two cut vertices carry a second pendant edge, so the rank falls short of n.
  const WeightedDigraph g = fixtures::r2_block_graph_example();
  EXPECT_TRUE(is_r2_block_graph(g));
  EXPECT_FALSE(r2_block_graph_hypothesis(g));
  EXPECT_EQ(oracle::rank(g), 14U);
  EXPECT_LT(oracle::rank(g), g.order());
  EXPECT_THROW(rank_r2_block_graph(g), Error);

  const WeightedDigraph b = fixtures::r2_biblock_graph_example();
  EXPECT_TRUE(is_r2_biblock_graph(b));
  EXPECT_FALSE(r2_biblock_graph_hypothesis(b));
  EXPECT_EQ(oracle::rank(b), 12U);
  EXPECT_THROW(rank_r2_biblock_graph(b), Error);
}

TEST(BiblockGraphs, R0Hypothesis) {
  // K_{2,2} blocks {0,1 | 2,3} and {0,4 | 5,6}: 0 is the only cut.
  const WeightedDigraph g = simple(7, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 5}, {0, 6}, {4, 5}, {4, 6}});
  EXPECT_TRUE(biblock_r0_hypothesis(g));
  EXPECT_EQ(rank_biblock_graph(g).rank, 4U);
  EXPECT_EQ(oracle::rank(g), 4U);
  // K_{1,2} blocks: the star side has no noncut vertex.
  const WeightedDigraph star = simple(4, {{0, 1}, {0, 2}, {2, 3}});
  EXPECT_FALSE(biblock_r0_hypothesis(star));
  EXPECT_THROW(rank_biblock_graph(star), Error);
}

TEST(ClosedForms, GeneratedFamilies) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenSpec spec;
    spec.n = 4 + seed % 12;
    spec.seed = seed;

    spec.family = Family::R2BlockGraph;
    const WeightedDigraph bg = gen(spec);
    ASSERT_EQ(rank_r2_block_graph(bg).rank, bg.order());
    ASSERT_EQ(oracle::rank(bg), bg.order()) << format_digraph(bg);

    spec.family = Family::R2BiblockGraph;
    const WeightedDigraph bb = gen(spec);
    const std::size_t k = decompose(bb).block_count();
    ASSERT_EQ(rank_r2_biblock_graph(bb).rank, 2 * k);
    ASSERT_EQ(oracle::rank(bb), 2 * k) << format_digraph(bb);

    spec.family = Family::BiblockGraph;
    const WeightedDigraph b0 = gen(spec);
    const std::size_t k0 = decompose(b0).block_count();
    ASSERT_EQ(rank_biblock_graph(b0).rank, 2 * k0);
    ASSERT_EQ(oracle::rank(b0), 2 * k0) << format_digraph(b0);
  }
}
