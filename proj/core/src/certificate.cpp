#include "blockrank/certificate.hpp"

#include <sstream>

namespace blockrank {

std::string_view rule_name(RuleTag tag) noexcept {
  switch (tag) {
    case RuleTag::CaseIPeel: return "CaseIPeel";
    case RuleTag::R2Digraph: return "R2Digraph";
    case RuleTag::MdtFormula: return "MdtFormula";
    case RuleTag::GenR2: return "GenR2";
    case RuleTag::R0Peel: return "R0Peel";
    case RuleTag::R0Digraph: return "R0Digraph";
    case RuleTag::CaseIIIPeel: return "CaseIIIPeel";
    case RuleTag::CaseIIILt: return "CaseIIILt";
    case RuleTag::TreeMatching: return "TreeMatching";
    case RuleTag::R2Tree: return "R2Tree";
    case RuleTag::BlockGraph2k: return "BlockGraph2k";
    case RuleTag::BiblockGraph2k: return "BiblockGraph2k";
    case RuleTag::DirectRank: return "DirectRank";
    case RuleTag::ComponentSum: return "ComponentSum";
  }
  return "?";
}

CertificateNode make_node(RuleTag rule, std::size_t contributes, std::vector<CertificateNode> children,
                          std::optional<std::size_t> block, std::optional<VertexId> cut) {
  CertificateNode node;
  node.rule = rule;
  node.block = block;
  node.cut = cut;
  node.contributes = contributes;
  node.rank = contributes;
  for (const auto& c : children) node.rank += c.rank;
  node.children = std::move(children);
  return node;
}

bool certificate_consistent(const CertificateNode& node) {
  std::size_t sum = node.contributes;
  for (const auto& c : node.children) {
    if (!certificate_consistent(c)) return false;
    sum += c.rank;
  }
  return sum == node.rank;
}

std::size_t count_rule(const CertificateNode& node, RuleTag tag) {
  std::size_t n = node.rule == tag ? 1 : 0;
  for (const auto& c : node.children) n += count_rule(c, tag);
  return n;
}

namespace {

void render(const CertificateNode& node, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << rule_name(node.rule) << " block=";
  if (node.block) {
    out << *node.block;
  } else {
    out << '-';
  }
  out << " v=";
  if (node.cut) {
    out << *node.cut;
  } else {
    out << '-';
  }
  out << " contributes=" << node.contributes << '\n';
  for (const auto& c : node.children) render(c, depth + 1, out);
}

}  // namespace

std::string render_certificate(const CertificateNode& node) {
  std::ostringstream out;
  render(node, 0, out);
  return out.str();
}

}  // namespace blockrank
