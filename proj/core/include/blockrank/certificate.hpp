#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockrank/digraph.hpp"

namespace blockrank {

enum class RuleTag {
  CaseIPeel,       // r(G) = r(H\v) + r(G\H) + 2
  R2Digraph,       // sum of r(breve B_i) + 2m over an r2-digraph
  MdtFormula,      // same sum under the per-block rank-drop hypothesis
  GenR2,           // r2-digraph with digraphs hung off its cut vertices
  R0Peel,          // r(G) = r(H\v) + r(G\(H\v))
  R0Digraph,       // sum of r(B_i) over an r0-digraph
  CaseIIIPeel,     // rank +1 split at v
  CaseIIILt,       // the corner left after eliminating both H-side borders
  TreeMatching,    // 2q
  R2Tree,          // 2q + s
  BlockGraph2k,    // nonsingular r2-block graph
  BiblockGraph2k,  // 2k for biblock graphs
  DirectRank,      // exact elimination
  ComponentSum,    // disconnected input
};

std::string_view rule_name(RuleTag tag) noexcept;

/// One rule application. `rank` is always contributes + the sum of the
/// children's ranks.
struct CertificateNode {
  RuleTag rule = RuleTag::DirectRank;
  std::optional<std::size_t> block;  // block index in the decomposition the rule used
  std::optional<VertexId> cut;       // cut vertex, in the ids of the top-level input
  std::size_t contributes = 0;
  std::size_t rank = 0;
  std::vector<CertificateNode> children;
};

struct RankOutcome {
  std::size_t rank = 0;
  CertificateNode certificate;
};

CertificateNode make_node(RuleTag rule, std::size_t contributes, std::vector<CertificateNode> children = {},
                          std::optional<std::size_t> block = std::nullopt,
                          std::optional<VertexId> cut = std::nullopt);

/// Checks rank = contributes + sum of child ranks at every node.
bool certificate_consistent(const CertificateNode& node);

std::size_t count_rule(const CertificateNode& node, RuleTag tag);

/// Indented tree, two spaces per level:
///   <rule> block=<i|-> v=<cut|-> contributes=<r>
std::string render_certificate(const CertificateNode& node);

}  // namespace blockrank
