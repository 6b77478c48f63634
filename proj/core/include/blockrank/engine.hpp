#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blockrank/blocks.hpp"
#include "blockrank/certificate.hpp"
#include "blockrank/classify.hpp"
#include "blockrank/digraph.hpp"

namespace blockrank {

struct EngineOptions {
  /// Recompute the rank by elimination at the end and throw InternalMismatch
  /// if the certificate disagrees.
  bool check_oracle = true;
};

/// Structural rank: components are summed; a separable component goes to the
/// r2 closed form, then the r0 closed form, then a pendant-block peel
/// (CASE I before II before III, lowest block index first), and otherwise to
/// direct elimination.
RankOutcome rank_recursive(const WeightedDigraph& g, const EngineOptions& options = {});

/// r(G) = r(H\v) + r(G\H) + 2. Throws PreconditionViolated unless the split is CASE I.
RankOutcome rank_case1_peel(const WeightedDigraph& g, const CutSplit& split);

/// True when the split is CASE II and the loop at v is zero or one of the
/// G\H borders of v is independent of A(G\H).
bool case2_peel_applies(const WeightedDigraph& g, const CutSplit& split);

/// r(G) = r(H\v) + r(G\(H\v)). Throws PreconditionViolated unless
/// case2_peel_applies.
RankOutcome rank_case2_peel(const WeightedDigraph& g, const CutSplit& split);

/// CASE III split: eliminates whichever H-side borders of v lie in the space
/// of A(H\v) and classifies what is left against A(G\H). Throws
/// PreconditionViolated unless the split is CASE III.
RankOutcome rank_case3_peel(const WeightedDigraph& g, const CutSplit& split);

/// r(G) == r(G \ S) + 2|S|.
bool check_lemma_2rin(const WeightedDigraph& g, std::span<const VertexId> vertices);

struct SubsetRankDrop {
  bool full_set = false;      // the drop is 2|S| for S = all given vertices
  bool every_subset = false;  // the drop is 2|T| for every subset T
};

/// Enumerates all 2^m subsets; throws InvalidSpec when m > 20.
SubsetRankDrop check_lemma_2rin_subsets(const WeightedDigraph& g, std::span<const VertexId> vertices);

/// Pendant block with exactly one cut vertex v and r(B) = r(B\v) + 2.
bool is_r2_block(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i);
/// Every cut vertex lies in some r2-block.
bool is_r2_digraph(const WeightedDigraph& g, const BlockDecomposition& d);
/// r(B) = r(B\v) for every cut vertex v of G in B (vacuous without cuts).
bool is_r0_block(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i);
/// At least k - 1 of the k blocks are r0-blocks.
bool is_r0_digraph(const WeightedDigraph& g, const BlockDecomposition& d);

/// Sum of r(breve B_i) + 2m, when every breve B_i is nonempty and
/// r(B_i) = r(breve B_i) + 2 m_i. Throws PreconditionViolated naming the first
/// failing block.
RankOutcome rank_mdt(const WeightedDigraph& g, const BlockDecomposition& d);

/// Sum of r(breve B_i) + 2m. Throws PreconditionViolated unless is_r2_digraph.
RankOutcome rank_r2_digraph(const WeightedDigraph& g, const BlockDecomposition& d);

/// Sum of r(B_i). Throws PreconditionViolated unless is_r0_digraph and no cut
/// vertex carries a loop.
RankOutcome rank_r0_digraph(const WeightedDigraph& g, const BlockDecomposition& d);

/// Redraws the loop weights at all cut vertices (zero included) `samples`
/// times and compares ranks. Throws PreconditionViolated unless is_r2_digraph.
bool loop_invariance_check(const WeightedDigraph& g, const BlockDecomposition& d, std::uint64_t seed,
                           std::size_t samples = 10);

/// A digraph W joined to cut vertex `cut` of G by arcs cut -> w and w -> cut.
struct Attachment {
  WeightedDigraph graph;
  VertexId graph_vertex = 0;
  VertexId cut = 0;
  Weight to_graph = 1;
  Weight from_graph = 1;
};

/// G followed by each W_i in order, with the joining arcs added.
WeightedDigraph attach_digraphs(const WeightedDigraph& g, std::span<const Attachment> attachments);

/// Rank of attach_digraphs(g, attachments) as sum of r(breve B_i) over G's
/// blocks + sum of r(W_i) + 2m. Throws PreconditionViolated unless G is an
/// r2-digraph and every attachment sits at one of its cut vertices.
RankOutcome rank_genr2(const WeightedDigraph& g, std::span<const Attachment> attachments);

struct EdgeAddition {
  VertexId at = 0;
  EdgeKind kind = EdgeKind::SimpleEdge;
  EdgeWeights weights;
};

WeightedDigraph add_edges(const WeightedDigraph& g, std::span<const EdgeAddition> additions);

/// Rank change from adding the edges at cut vertices of an r2-digraph: one
/// per nc-edge or nc-arc. Throws PreconditionViolated unless G is r2 and every
/// addition sits at a cut vertex of G.
std::size_t rank_delta_cr2(const WeightedDigraph& g, std::span<const EdgeAddition> additions);

}  // namespace blockrank
