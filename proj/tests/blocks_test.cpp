#include <gtest/gtest.h>

#include <set>

#include "blockrank/blocks.hpp"
#include "blockrank/error.hpp"
#include "blockrank/fixtures.hpp"
#include "blockrank/generators.hpp"
#include "support/oracle.hpp"

using namespace blockrank;

namespace {

using Sets = std::vector<std::vector<VertexId>>;

WeightedDigraph simple(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    arcs.push_back({u, v, 1});
    arcs.push_back({v, u, 1});
  }
  return WeightedDigraph::build(n, arcs);
}

}  // namespace

TEST(SimpleGraph, Underlying) {
  const SimpleGraph bi = underlying_simple_graph(WeightedDigraph::build(2, {{0, 1, 1}, {1, 0, 2}}));
  EXPECT_EQ(bi.edge_count(), 1U);
  const SimpleGraph one = underlying_simple_graph(WeightedDigraph::build(2, {{1, 0, 1}}));
  EXPECT_EQ(one.edge_count(), 1U);
  EXPECT_TRUE(one.has_edge(0, 1));
  const SimpleGraph loop = underlying_simple_graph(WeightedDigraph::build(1, {{0, 0, 4}}));
  EXPECT_EQ(loop.edge_count(), 0U);
  EXPECT_EQ(loop.degree(0), 0U);
}

TEST(Decompose, SevenBlockDigraph) {
  const WeightedDigraph g = fixtures::seven_block_digraph();
  const BlockDecomposition d = decompose(g);
  EXPECT_EQ(d.blocks, (Sets{{0, 1, 2}, {0, 3, 4}, {0, 5, 6, 7}, {1, 13}, {3, 12}, {5, 10, 11}, {7, 8, 9}}));
  EXPECT_EQ(d.cut_vertices, (std::vector<VertexId>{0, 1, 3, 5, 7}));
  EXPECT_EQ(d.cut_vertices, oracle::cut_vertices(g));
  EXPECT_EQ(d.pendant, (std::vector<bool>{false, false, false, true, true, true, true}));
}

TEST(Decompose, NonseparableAndPath) {
  const BlockDecomposition cycle = decompose(simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(cycle.block_count(), 1U);
  EXPECT_TRUE(cycle.cut_vertices.empty());
  const BlockDecomposition path = decompose(simple(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(path.block_count(), 2U);
  EXPECT_EQ(path.cut_vertices, std::vector<VertexId>{1});
}

TEST(Decompose, IsolatedVerticesAreBlocks) {
  const BlockDecomposition d = decompose(WeightedDigraph::build(3, {{0, 1, 1}, {2, 2, 1}}));
  EXPECT_EQ(d.blocks, (Sets{{0, 1}, {2}}));
  EXPECT_TRUE(d.cut_vertices.empty());
  EXPECT_EQ(decompose(WeightedDigraph()).block_count(), 0U);
}

TEST(Breve, Examples) {
  const WeightedDigraph g = fixtures::seven_block_digraph();
  const BlockDecomposition d = decompose(g);
  // Block {1, 13}: 1 is a cut vertex of g.
  EXPECT_EQ(breve(g, d, 3).original, std::vector<VertexId>{13});
  // Block {0, 1, 2}: both 0 and 1 are cut vertices.
  EXPECT_EQ(breve(g, d, 0).original, std::vector<VertexId>{2});
  const WeightedDigraph c = simple(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(breve(c, decompose(c), 0).graph, c);
  EXPECT_THROW(breve(g, d, 7), Error);
}

TEST(CutCounts, Examples) {
  const BlockDecomposition d = decompose(fixtures::seven_block_digraph());
  EXPECT_EQ(cut_vertex_count_per_block(d), (std::vector<std::size_t>{2, 2, 3, 1, 1, 1, 1}));
  EXPECT_EQ(cut_vertex_count_per_block(decompose(simple(3, {{0, 1}, {1, 2}, {2, 0}}))), std::vector<std::size_t>{0});
  EXPECT_EQ(cut_vertex_count_per_block(decompose(simple(4, {{0, 1}, {0, 2}, {0, 3}}))),
            (std::vector<std::size_t>{1, 1, 1}));
}

TEST(DecomposeProperties, RandomDigraphs) {
  std::mt19937_64 rng(41);
  const std::vector<Weight> pool = default_weight_pool();
  for (int t = 0; t < 400; ++t) {
    WeightedDigraph g;
    if (t % 2) {
      g = random_block_digraph(1 + rng() % 10, rng, pool);
    } else {
      GenSpec spec;
      spec.n = 1 + rng() % 10;
      spec.seed = rng();
      g = gen(spec);
    }
    const BlockDecomposition d = decompose(g);
    const SimpleGraph s = underlying_simple_graph(g);

    // Blocks cover V(G).
    std::set<VertexId> covered;
    for (const auto& b : d.blocks) covered.insert(b.begin(), b.end());
    EXPECT_EQ(covered.size(), g.order());

    // Every edge in exactly one block.
    for (VertexId u = 0; u < s.n; ++u) {
      for (VertexId v : s.adjacency[u]) {
        if (v < u) continue;
        std::size_t holders = 0;
        for (const auto& b : d.blocks) {
          holders += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
        }
        EXPECT_EQ(holders, 1U);
      }
    }

    // Two blocks share at most one vertex, and only a cut vertex.
    for (std::size_t i = 0; i < d.block_count(); ++i) {
      for (std::size_t j = i + 1; j < d.block_count(); ++j) {
        std::vector<VertexId> common;
        std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(), d.blocks[j].end(),
                              std::back_inserter(common));
        EXPECT_LE(common.size(), 1U);
        for (VertexId v : common) EXPECT_TRUE(d.is_cut_vertex(v));
      }
    }

    // Cut by membership count equals cut by removal.
    std::vector<VertexId> by_membership;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (d.membership[v].size() >= 2) by_membership.push_back(v);
    }
    EXPECT_EQ(by_membership, oracle::cut_vertices(g));
    EXPECT_EQ(d.cut_vertices, by_membership);

    // Pendant flags, and at least two pendant blocks when a cut exists.
    const auto counts = cut_vertex_count_per_block(d);
    std::size_t pendant = 0;
    for (std::size_t i = 0; i < d.block_count(); ++i) {
      EXPECT_EQ(d.pendant[i], counts[i] <= 1);
      pendant += d.pendant[i] && counts[i] == 1;
    }
    if (!d.cut_vertices.empty()) EXPECT_GE(pendant, 2U);

    EXPECT_TRUE(std::is_sorted(d.blocks.begin(), d.blocks.end()));
  }
}
