#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockrank/blocks.hpp"
#include "blockrank/certificate.hpp"
#include "blockrank/digraph.hpp"

namespace blockrank {

/// No loops, and every arc has weight 1 and a reverse arc.
bool is_simple(const WeightedDigraph& g);

struct Bipartition {
  std::vector<VertexId> left;   // side containing the smallest vertex
  std::vector<VertexId> right;
};

/// The two sides when the block induces a complete bipartite graph K_{a,b}
/// with a, b >= 1.
std::optional<Bipartition> complete_bipartition(const SimpleGraph& s, std::span<const VertexId> block);

/// Simple, and every block is a complete graph.
bool is_block_graph(const WeightedDigraph& g);
/// Simple, and every block is a complete bipartite graph.
bool is_biblock_graph(const WeightedDigraph& g);

/// Block graph with a pendant simple edge at every cut vertex.
bool is_r2_block_graph(const WeightedDigraph& g);
/// Biblock graph with a pendant simple edge at every cut vertex.
bool is_r2_biblock_graph(const WeightedDigraph& g);

/// After keeping one pendant edge per cut vertex aside, every other block has
/// at least two noncut vertices.
bool r2_block_graph_hypothesis(const WeightedDigraph& g);
/// Same, with the two noncut vertices required on different sides.
bool r2_biblock_graph_hypothesis(const WeightedDigraph& g);
/// Biblock graph whose every block has noncut vertices on both sides.
bool biblock_r0_hypothesis(const WeightedDigraph& g);

/// n. Throws PreconditionViolated unless is_r2_block_graph and the hypothesis hold.
RankOutcome rank_r2_block_graph(const WeightedDigraph& g);
/// 2k. Throws PreconditionViolated unless is_r2_biblock_graph and the hypothesis hold.
RankOutcome rank_r2_biblock_graph(const WeightedDigraph& g);
/// 2k. Throws PreconditionViolated unless biblock_r0_hypothesis holds.
RankOutcome rank_biblock_graph(const WeightedDigraph& g);

}  // namespace blockrank
