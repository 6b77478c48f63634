#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "blockrank/blocks.hpp"
#include "blockrank/certificate.hpp"
#include "blockrank/digraph.hpp"

namespace blockrank {

enum class TreeKind {
  LooplessBiArc,  // two opposite arcs per edge, no loops
  CutLoopBiArc,   // two opposite arcs per edge, loops only at cut vertices
  R2Tree,         // cut-loop bi-arc core with an nc~-edge at each of its cut
                  // vertices, plus nc-edge/nc-arc/nc~-arc leaves at core cuts
};

std::string_view tree_kind_name(TreeKind kind) noexcept;

bool is_loopless_bi_arc_tree(const WeightedDigraph& g);
bool is_cut_loop_bi_arc_tree(const WeightedDigraph& g);

/// The first of LooplessBiArc, R2Tree, CutLoopBiArc that fits, or nullopt
/// when the underlying graph is not a tree.
std::optional<TreeKind> classify_tree(const WeightedDigraph& g);

struct Matching {
  std::size_t size = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (smaller, larger)
};

/// Maximum matching of a forest by repeatedly matching a leaf to its
/// neighbour. Throws NotAForest.
Matching max_matching(const SimpleGraph& forest);

/// 2q. Throws PreconditionViolated unless the tree is LooplessBiArc.
RankOutcome rank_tree(const WeightedDigraph& t);

struct R2TreeShape {
  std::vector<VertexId> core;         // vertices of the cut-loop bi-arc core, sorted
  std::vector<VertexId> attachments;  // leaves hung off core cut vertices, sorted
  std::size_t s = 0;                  // attachments that are nc-edges or nc-arcs
};

/// Splits an r2-tree digraph into its core and attachments, or nullopt.
std::optional<R2TreeShape> r2_tree_shape(const WeightedDigraph& g);

struct R2TreeRank {
  std::size_t q = 0;  // matching number of the core
  std::size_t s = 0;
  std::size_t rank = 0;
  CertificateNode certificate;
};

/// 2q + s. Throws PreconditionViolated unless the tree is R2Tree or
/// LooplessBiArc (which gives s = 0 and q of the whole tree).
R2TreeRank rank_r2_tree(const WeightedDigraph& t);

}  // namespace blockrank
