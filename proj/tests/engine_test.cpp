#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "blockrank/blocks.hpp"
#include "blockrank/engine.hpp"
#include "blockrank/error.hpp"
#include "blockrank/fixtures.hpp"
#include "blockrank/generators.hpp"
#include "blockrank/text_format.hpp"
#include "support/oracle.hpp"

using namespace blockrank;

namespace {

struct Sketch {
  std::size_t n = 0;
  std::vector<Arc> arcs;

  Sketch& edge(VertexId u, VertexId v, Weight a = 1, Weight b = 1) {
    arcs.push_back({u, v, a});
    arcs.push_back({v, u, b});
    return *this;
  }
  Sketch& arc(VertexId u, VertexId v, Weight w = 1) {
    arcs.push_back({u, v, w});
    return *this;
  }
  Sketch& loop(VertexId u, Weight w = 1) { return arc(u, u, w); }
  [[nodiscard]] WeightedDigraph build() const { return WeightedDigraph::build(n, arcs); }
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalMismatch;
}

// Two K_{2,2} blocks glued at vertex 0: {0,1 | 2,3} and {0,4 | 5,6}.
WeightedDigraph two_k22() {
  Sketch s{7};
  for (VertexId a : {0, 1}) {
    for (VertexId b : {2, 3}) s.edge(a, b);
  }
  for (VertexId a : {0, 4}) {
    for (VertexId b : {5, 6}) s.edge(a, b);
  }
  return s.build();
}

}  // namespace

TEST(CaseOnePeel, Path) {
  const WeightedDigraph p = Sketch{3}.edge(0, 1).edge(1, 2).build();
  const RankOutcome r = rank_case1_peel(p, CutSplit::make(p, 1, {0, 1}));
  EXPECT_EQ(r.rank, 2U);
  EXPECT_EQ(r.rank, oracle::rank(p));
  EXPECT_EQ(r.certificate.rule, RuleTag::CaseIPeel);
  EXPECT_EQ(r.certificate.contributes, 2U);
  EXPECT_TRUE(certificate_consistent(r.certificate));
}

TEST(CaseOnePeel, EmptyRest) {
  const WeightedDigraph e = Sketch{2}.edge(0, 1, 3, 5).build();
  EXPECT_EQ(rank_case1_peel(e, CutSplit::make(e, 0, {0, 1})).rank, 2U);
}

TEST(CaseOnePeel, ExtendedSevenBlockDigraph) {
  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  // The nc~-edge {0, 15} at vertex 0.
  const RankOutcome r = rank_case1_peel(g, CutSplit::make(g, 0, {0, 15}));
  EXPECT_EQ(r.rank, oracle::rank(g));
}

TEST(CaseOnePeel, RejectsOtherCases) {
  const WeightedDigraph arc = Sketch{3}.arc(0, 1).edge(1, 2).build();
  EXPECT_EQ(code_of([&] { rank_case1_peel(arc, CutSplit::make(arc, 1, {0, 1})); }), ErrorCode::PreconditionViolated);
}

TEST(SubsetRankDrop, Examples) {
  const WeightedDigraph g = Sketch{4}.edge(0, 1, 2, 3).edge(2, 3, -1, 1).build();
  EXPECT_TRUE(check_lemma_2rin(g, {}));
  EXPECT_TRUE(check_lemma_2rin(g, std::vector<VertexId>{0, 2}));
  EXPECT_EQ(oracle::rank(g), 4U);

  Sketch k{4};
  for (VertexId a : {0, 1}) {
    for (VertexId b : {2, 3}) k.edge(a, b);
  }
  const WeightedDigraph k22 = k.build();
  for (VertexId v = 0; v < 4; ++v) EXPECT_FALSE(check_lemma_2rin(k22, std::vector<VertexId>{v}));
}

TEST(SubsetRankDrop, SubsetsAgreeWithOracle) {
  std::mt19937_64 rng(5);
  const auto pool = default_weight_pool();
  std::size_t full_hits = 0;
  for (int t = 0; t < 200; ++t) {
    const WeightedDigraph g = random_block_digraph(2 + rng() % 8, rng, pool);
    std::vector<VertexId> s;
    for (VertexId v = 0; v < g.order() && s.size() < 4; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    const SubsetRankDrop got = check_lemma_2rin_subsets(g, s);
    const std::size_t base = oracle::rank(g);
    bool every = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
      std::vector<std::size_t> t_set;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask >> i & 1U) t_set.push_back(s[i]);
      }
      every = every && base == oracle::rank_without(g, t_set) + 2 * t_set.size();
    }
    const bool full = base == oracle::rank_without(g, s) + 2 * s.size();
    EXPECT_EQ(got.full_set, full);
    EXPECT_EQ(got.every_subset, every);
    EXPECT_EQ(full, every);
    full_hits += full && !s.empty();
  }
  EXPECT_GT(full_hits, 0U);
  std::vector<VertexId> many(21);
  std::iota(many.begin(), many.end(), VertexId{0});
  EXPECT_EQ(code_of([&] { check_lemma_2rin_subsets(WeightedDigraph::build(21, {}), many); }), ErrorCode::InvalidSpec);
}

TEST(Mdt, Examples) {
  const WeightedDigraph c = Sketch{3}.edge(0, 1).edge(1, 2).edge(2, 0).build();
  EXPECT_EQ(rank_mdt(c, decompose(c)).rank, oracle::rank(c));

  const WeightedDigraph p3 = Sketch{3}.edge(0, 1).edge(1, 2).build();
  EXPECT_EQ(rank_mdt(p3, decompose(p3)).rank, 2U);

  // r2 but not per block: {0, 1, 2} holds two cuts and one noncut vertex.
  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  EXPECT_EQ(code_of([&] { rank_mdt(g, decompose(g)); }), ErrorCode::PreconditionViolated);
}

TEST(Mdt, ReportsFailingBlock) {
  const WeightedDigraph g = fixtures::seven_block_digraph();
  EXPECT_EQ(code_of([&] { rank_mdt(g, decompose(g)); }), ErrorCode::PreconditionViolated);
}

TEST(Mdt, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const WeightedDigraph g = gen_mdt_instance(12, seed, default_weight_pool());
    EXPECT_EQ(rank_mdt(g, decompose(g)).rank, oracle::rank(g)) << format_digraph(g);
  }
}

TEST(R2Blocks, Predicates) {
  const WeightedDigraph g = Sketch{3}.edge(0, 1, 2, 3).arc(1, 2).build();
  const BlockDecomposition d = decompose(g);
  EXPECT_TRUE(is_r2_block(g, d, 0));   // {0,1}: nc~-edge
  EXPECT_FALSE(is_r2_block(g, d, 1));  // {1,2}: single arc
  EXPECT_TRUE(is_r2_digraph(g, d));
  const WeightedDigraph ext = fixtures::seven_block_r2_extension();
  EXPECT_TRUE(is_r2_digraph(ext, decompose(ext)));
  const WeightedDigraph base = fixtures::seven_block_digraph();
  EXPECT_FALSE(is_r2_digraph(base, decompose(base)));
}

TEST(R2Digraph, FixturesMatchOracle) {
  for (const WeightedDigraph& g : {fixtures::seven_block_r2_extension(), fixtures::r2_tree_example(),
                                   fixtures::r2_block_graph_example(), fixtures::r2_biblock_graph_example()}) {
    const BlockDecomposition d = decompose(g);
    const RankOutcome r = rank_r2_digraph(g, d);
    EXPECT_EQ(r.rank, oracle::rank(g));
    EXPECT_TRUE(certificate_consistent(r.certificate));
  }
  const WeightedDigraph base = fixtures::seven_block_digraph();
  EXPECT_EQ(code_of([&] { rank_r2_digraph(base, decompose(base)); }), ErrorCode::PreconditionViolated);
}

TEST(LoopInvariance, ExtendedSevenBlockDigraph) {
  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  const BlockDecomposition d = decompose(g);
  EXPECT_TRUE(loop_invariance_check(g, d, 1, 10));
  const std::size_t r = oracle::rank(g);
  WeightedDigraph sevens = g;
  for (VertexId v : d.cut_vertices) sevens = with_loop(sevens, v, 7);
  EXPECT_EQ(oracle::rank(sevens), r);
  ASSERT_TRUE(g.has_loop(1));
  EXPECT_EQ(oracle::rank(with_loop(g, 1, 0)), r);
  const WeightedDigraph base = fixtures::seven_block_digraph();
  EXPECT_THROW(loop_invariance_check(base, decompose(base), 1), Error);
}

TEST(GenR2, Examples) {
  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  const std::size_t r = oracle::rank(g);
  EXPECT_EQ(rank_genr2(g, {}).rank, r);

  const WeightedDigraph k3 = Sketch{3}.edge(0, 1).edge(1, 2).edge(2, 0).build();
  const std::vector<Attachment> with_k3{{k3, 0, 5, 1, 1}};
  EXPECT_EQ(oracle::rank(attach_digraphs(g, with_k3)), r + 3);
  EXPECT_EQ(rank_genr2(g, with_k3).rank, r + 3);

  const std::vector<Attachment> lone{{WeightedDigraph::build(1, {}), 0, 0, 2, -1}};
  EXPECT_EQ(oracle::rank(attach_digraphs(g, lone)), r);
  EXPECT_EQ(rank_genr2(g, lone).rank, r);

  const std::vector<Attachment> not_cut{{k3, 0, 2, 1, 1}};
  EXPECT_EQ(code_of([&] { rank_genr2(g, not_cut); }), ErrorCode::PreconditionViolated);
  const std::vector<Attachment> zero{{k3, 0, 0, 0, 1}};
  EXPECT_EQ(code_of([&] { rank_genr2(g, zero); }), ErrorCode::ZeroWeight);
}

TEST(Cr2, Examples) {
  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  const std::size_t r = oracle::rank(g);
  const std::vector<EdgeAddition> simple{{0, EdgeKind::SimpleEdge, {}}, {5, EdgeKind::SimpleEdge, {}},
                                         {7, EdgeKind::SimpleEdge, {}}};
  EXPECT_EQ(rank_delta_cr2(g, simple), 0U);
  EXPECT_EQ(oracle::rank(add_edges(g, simple)), r);

  EdgeWeights in;
  in.direction = ArcDirection::ToAnchor;
  in.loop = 3;
  const std::vector<EdgeAddition> nc_arcs{{1, EdgeKind::NcArc, {}}, {3, EdgeKind::NcArc, in}};
  EXPECT_EQ(rank_delta_cr2(g, nc_arcs), 2U);
  EXPECT_EQ(oracle::rank(add_edges(g, nc_arcs)), r + 2);

  EXPECT_EQ(rank_delta_cr2(g, {}), 0U);
  const std::vector<EdgeAddition> off_cut{{2, EdgeKind::NcArc, {}}};
  EXPECT_EQ(code_of([&] { rank_delta_cr2(g, off_cut); }), ErrorCode::PreconditionViolated);
}

TEST(CaseTwoPeel, LoopArcPendant) {
  // H = {0, 1}: loop at 0 and arc 0 -> 1; v = 1 carries no loop. Rest: path 1 - 2 - 3.
  const WeightedDigraph g = Sketch{4}.loop(0).arc(0, 1).edge(1, 2).edge(2, 3, 2, 1).build();
  const CutSplit s = CutSplit::make(g, 1, {0, 1});
  ASSERT_TRUE(case2_peel_applies(g, s));
  const RankOutcome r = rank_case2_peel(g, s);
  EXPECT_EQ(r.rank, oracle::rank(g));
  EXPECT_EQ(r.rank, 1 + oracle::rank_without(g, {0}));
  EXPECT_EQ(r.certificate.rule, RuleTag::R0Peel);
}

TEST(CaseTwoPeel, CompleteBipartitePendant) {
  // K_{2,2} {1,2 | 0,3} at cut 0 with an nc~-edge 0 - 4 and a triangle 4 - 5 - 0... kept simple:
  Sketch s{6};
  for (VertexId a : {0, 1}) {
    for (VertexId b : {2, 3}) s.edge(a, b);
  }
  s.edge(0, 4).edge(4, 5);
  const WeightedDigraph g = s.build();
  const CutSplit split = CutSplit::make(g, 0, {0, 1, 2, 3});
  ASSERT_TRUE(case2_peel_applies(g, split));
  EXPECT_EQ(rank_case2_peel(g, split).rank, oracle::rank(g));
  EXPECT_EQ(oracle::rank(g), 2 + oracle::rank_without(g, {1, 2, 3}));
}

TEST(CaseTwoPeel, EmptyRest) {
  const WeightedDigraph g = Sketch{2}.loop(0).arc(0, 1).build();
  const CutSplit s = CutSplit::make(g, 1, {0, 1});
  EXPECT_EQ(rank_case2_peel(g, s).rank, oracle::rank(g));
}

// CASE II with a loop at v and both far borders inside the far space: the
// peel formula is not claimed, and the engine must not use it.
TEST(CaseTwoPeel, UnclaimedCaseFallsBack) {
  const WeightedDigraph g = Sketch{3}.loop(0).loop(1).loop(2).edge(0, 1).edge(1, 2).build();
  const CutSplit s = CutSplit::make(g, 1, {0, 1});
  EXPECT_EQ(classify_cut(g, s).tag, CaseTag::RankPlus0);
  EXPECT_FALSE(case2_peel_applies(g, s));
  EXPECT_EQ(code_of([&] { rank_case2_peel(g, s); }), ErrorCode::PreconditionViolated);
  // The unclaimed formula would say 1 + 1.
  EXPECT_EQ(oracle::rank(g), 3U);
  EXPECT_EQ(oracle::rank_without(g, {0}), 1U);

  const RankOutcome r = rank_recursive(g);
  EXPECT_EQ(r.rank, 3U);
  EXPECT_EQ(r.certificate.rule, RuleTag::DirectRank);
  EXPECT_EQ(count_rule(r.certificate, RuleTag::R0Peel), 0U);
}

TEST(R0, Predicates) {
  const WeightedDigraph g = two_k22();
  const BlockDecomposition d = decompose(g);
  ASSERT_EQ(d.block_count(), 2U);
  EXPECT_TRUE(is_r0_block(g, d, 0));
  EXPECT_TRUE(is_r0_block(g, d, 1));
  EXPECT_TRUE(is_r0_digraph(g, d));

  const WeightedDigraph p = Sketch{3}.edge(0, 1).edge(1, 2).build();
  const BlockDecomposition dp = decompose(p);
  EXPECT_FALSE(is_r0_block(p, dp, 0));
  EXPECT_FALSE(is_r0_digraph(p, dp));

  const WeightedDigraph c = Sketch{3}.edge(0, 1).edge(1, 2).edge(2, 0).build();
  EXPECT_TRUE(is_r0_digraph(c, decompose(c)));
}

TEST(R0, Rank) {
  const WeightedDigraph g = two_k22();
  EXPECT_EQ(rank_r0_digraph(g, decompose(g)).rank, 4U);
  EXPECT_EQ(oracle::rank(g), 4U);

  const WeightedDigraph c = Sketch{3}.edge(0, 1).edge(1, 2).edge(2, 0).build();
  EXPECT_EQ(rank_r0_digraph(c, decompose(c)).rank, oracle::rank(c));

  const WeightedDigraph looped = with_loop(g, 0, 1);
  EXPECT_EQ(code_of([&] { rank_r0_digraph(looped, decompose(looped)); }), ErrorCode::PreconditionViolated);
  const WeightedDigraph p = Sketch{3}.edge(0, 1).edge(1, 2).build();
  EXPECT_EQ(code_of([&] { rank_r0_digraph(p, decompose(p)); }), ErrorCode::PreconditionViolated);
}

TEST(CaseThreePeel, SingleArcPendant) {
  // H = {0, 1}, arc 0 -> 1, split at 1; the far side is vertex 2 joined to 1 both ways.
  const WeightedDigraph bare = Sketch{3}.arc(0, 1).edge(1, 2).build();
  const WeightedDigraph looped = Sketch{3}.arc(0, 1).edge(1, 2).loop(2).build();
  for (const WeightedDigraph& g : {bare, looped}) {
    const CutSplit s = CutSplit::make(g, 1, {0, 1});
    ASSERT_EQ(classify_cut(g, s).tag, CaseTag::RankPlus1);
    const RankOutcome r = rank_case3_peel(g, s);
    EXPECT_EQ(r.rank, oracle::rank(g));
    EXPECT_EQ(r.certificate.rule, RuleTag::CaseIIIPeel);
    EXPECT_TRUE(certificate_consistent(r.certificate));
  }
  // Far border outside A(G\H) = [0]: +2; inside [1]: +1.
  EXPECT_EQ(oracle::rank(bare), 0 + 0 + 2U);
  EXPECT_EQ(oracle::rank(looped), 0 + 1 + 1U);
  EXPECT_EQ(rank_case3_peel(bare, CutSplit::make(bare, 1, {0, 1})).certificate.contributes, 2U);
  EXPECT_EQ(rank_case3_peel(looped, CutSplit::make(looped, 1, {0, 1})).certificate.contributes, 1U);
}

TEST(CaseThreePeel, TrianglePendantInBlockGraph) {
  // Triangles {0,1,2} and {2,3,4} sharing 2; the pendant triangle is CASE III.
  const WeightedDigraph g = Sketch{5}.edge(0, 1).edge(1, 2).edge(2, 0).edge(2, 3).edge(3, 4).edge(4, 2).build();
  const CutSplit s = CutSplit::make(g, 2, {0, 1, 2});
  ASSERT_EQ(classify_cut(g, s).tag, CaseTag::RankPlus1);
  const RankOutcome r = rank_case3_peel(g, s);
  EXPECT_EQ(r.rank, oracle::rank(g));
  EXPECT_GE(count_rule(r.certificate, RuleTag::CaseIIILt), 1U);
  EXPECT_EQ(code_of([&] { rank_case1_peel(g, s); }), ErrorCode::PreconditionViolated);
}

TEST(CaseThreePeel, RandomPendants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PendantInstance p = gen_pendant_instance(CaseTag::RankPlus1, 10, seed, default_weight_pool());
    const RankOutcome r = rank_case3_peel(p.graph, p.split);
    ASSERT_EQ(r.rank, oracle::rank(p.graph)) << format_digraph(p.graph);
    EXPECT_TRUE(certificate_consistent(r.certificate));
  }
}

TEST(Recursive, Examples) {
  const WeightedDigraph c = Sketch{4}.edge(0, 1).edge(1, 2).edge(2, 3).edge(3, 0).loop(1).build();
  const RankOutcome rc = rank_recursive(c);
  EXPECT_EQ(rc.certificate.rule, RuleTag::DirectRank);
  EXPECT_TRUE(rc.certificate.children.empty());
  EXPECT_EQ(rc.rank, oracle::rank(c));

  const WeightedDigraph g = fixtures::seven_block_r2_extension();
  const RankOutcome rg = rank_recursive(g);
  EXPECT_EQ(rg.rank, oracle::rank(g));
  EXPECT_TRUE(certificate_consistent(rg.certificate));

  EXPECT_EQ(rank_recursive(WeightedDigraph()).rank, 0U);
  const RankOutcome two = rank_recursive(disjoint_union(c, g));
  EXPECT_EQ(two.certificate.rule, RuleTag::ComponentSum);
  EXPECT_EQ(two.rank, rc.rank + rg.rank);
}

TEST(Recursive, CliqueBlockGraphsUseCaseThree) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    GenSpec spec;
    spec.family = Family::BlockGraph;
    spec.seed = rng();
    spec.block_sizes = {3 + rng() % 3, 3 + rng() % 3, 3 + rng() % 2};
    const WeightedDigraph g = gen(spec);
    const RankOutcome r = rank_recursive(g);
    EXPECT_EQ(r.rank, oracle::rank(g));
    EXPECT_GE(count_rule(r.certificate, RuleTag::CaseIIIPeel), 1U);
  }
}

class Soundness : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Soundness, RecursiveMatchesOracle) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(n);
  const auto pool = default_weight_pool();
  for (int t = 0; t < 500; ++t) {
    WeightedDigraph g;
    if (t % 2) {
      g = random_block_digraph(n, rng, pool, t % 4 == 1);
    } else {
      GenSpec spec;
      spec.n = n;
      spec.seed = rng();
      g = gen(spec);
    }
    const RankOutcome r = rank_recursive(g, {.check_oracle = false});
    ASSERT_EQ(r.rank, oracle::rank(g)) << format_digraph(g);
    ASSERT_EQ(r.certificate.rank, r.rank);
    ASSERT_TRUE(certificate_consistent(r.certificate));
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, Soundness, ::testing::Values(6, 8, 10));

TEST(Certificate, Render) {
  const WeightedDigraph p = Sketch{3}.edge(0, 1).edge(1, 2).build();
  const RankOutcome r = rank_case1_peel(p, CutSplit::make(p, 1, {0, 1}));
  EXPECT_EQ(render_certificate(r.certificate),
            "CaseIPeel block=- v=1 contributes=2\n"
            "  DirectRank block=- v=- contributes=0\n"
            "  DirectRank block=- v=- contributes=0\n");
}
