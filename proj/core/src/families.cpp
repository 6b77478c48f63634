#include "blockrank/families.hpp"

#include <algorithm>

#include "blockrank/error.hpp"

namespace blockrank {

namespace {

std::size_t noncut_count(const BlockDecomposition& d, std::size_t i) {
  return d.blocks[i].size() - d.cuts_in_block(i).size();
}

// Block i is a simple edge {v, u} hanging off cut vertex v.
bool pendant_edge_at_cut(const BlockDecomposition& d, std::size_t i) {
  return d.blocks[i].size() == 2 && d.cuts_in_block(i).size() == 1;
}

// Every cut vertex has exactly one pendant edge, so the kept-aside edges are
// forced; returns the remaining blocks, or nullopt if some cut vertex has none.
// A second pendant edge at the same cut stays among the remaining blocks.
std::optional<std::vector<std::size_t>> blocks_after_pendant_edges(const BlockDecomposition& d) {
  std::vector<char> chosen(d.block_count(), 0);
  for (VertexId v : d.cut_vertices) {
    bool found = false;
    for (std::size_t i : d.membership[v]) {
      if (pendant_edge_at_cut(d, i)) {
        chosen[i] = 1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (!chosen[i]) rest.push_back(i);
  }
  return rest;
}

bool noncut_on_both_sides(const SimpleGraph& s, const BlockDecomposition& d, std::size_t i) {
  const auto parts = complete_bipartition(s, d.blocks[i]);
  if (!parts) return false;
  auto has_noncut = [&](const std::vector<VertexId>& side) {
    return std::any_of(side.begin(), side.end(), [&](VertexId u) { return !d.is_cut_vertex(u); });
  };
  return has_noncut(parts->left) && has_noncut(parts->right);
}

RankOutcome closed_form(RuleTag rule, std::size_t rank) {
  RankOutcome out;
  out.rank = rank;
  out.certificate = make_node(rule, rank);
  return out;
}

}  // namespace

bool is_simple(const WeightedDigraph& g) {
  const Rational one(1);
  for (const Arc& a : g.arcs()) {
    if (a.from == a.to || a.weight != one || g.weight(a.to, a.from) != one) return false;
  }
  return true;
}

std::optional<Bipartition> complete_bipartition(const SimpleGraph& s, std::span<const VertexId> block) {
  if (block.size() < 2) return std::nullopt;
  std::vector<VertexId> verts(block.begin(), block.end());
  std::sort(verts.begin(), verts.end());
  auto inside = [&](VertexId u) { return std::binary_search(verts.begin(), verts.end(), u); };

  // Colour by adjacency to the smallest vertex: its neighbours go right.
  Bipartition parts;
  const VertexId root = verts.front();
  for (VertexId u : verts) {
    (u == root || !s.has_edge(root, u) ? parts.left : parts.right).push_back(u);
  }
  if (parts.right.empty()) return std::nullopt;
  std::size_t edges = 0;
  for (VertexId u : verts) {
    for (VertexId w : s.adjacency[u]) {
      if (u < w && inside(w)) ++edges;
    }
  }
  if (edges != parts.left.size() * parts.right.size()) return std::nullopt;
  for (VertexId u : parts.left) {
    for (VertexId w : parts.right) {
      if (!s.has_edge(u, w)) return std::nullopt;
    }
  }
  return parts;
}

bool is_block_graph(const WeightedDigraph& g) {
  if (!is_simple(g)) return false;
  const SimpleGraph s = underlying_simple_graph(g);
  const BlockDecomposition d = decompose(s);
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!s.has_edge(b[i], b[j])) return false;
      }
    }
  }
  return true;
}

bool is_biblock_graph(const WeightedDigraph& g) {
  if (!is_simple(g)) return false;
  const SimpleGraph s = underlying_simple_graph(g);
  const BlockDecomposition d = decompose(s);
  return std::all_of(d.blocks.begin(), d.blocks.end(),
                     [&](const std::vector<VertexId>& b) { return complete_bipartition(s, b).has_value(); });
}

bool is_r2_block_graph(const WeightedDigraph& g) {
  return is_block_graph(g) && blocks_after_pendant_edges(decompose(g)).has_value();
}

bool is_r2_biblock_graph(const WeightedDigraph& g) {
  return is_biblock_graph(g) && blocks_after_pendant_edges(decompose(g)).has_value();
}

bool r2_block_graph_hypothesis(const WeightedDigraph& g) {
  if (!is_block_graph(g)) return false;
  const BlockDecomposition d = decompose(g);
  const auto rest = blocks_after_pendant_edges(d);
  if (!rest) return false;
  return std::all_of(rest->begin(), rest->end(), [&](std::size_t i) { return noncut_count(d, i) >= 2; });
}

bool r2_biblock_graph_hypothesis(const WeightedDigraph& g) {
  if (!is_biblock_graph(g)) return false;
  const SimpleGraph s = underlying_simple_graph(g);
  const BlockDecomposition d = decompose(s);
  const auto rest = blocks_after_pendant_edges(d);
  if (!rest) return false;
  return std::all_of(rest->begin(), rest->end(), [&](std::size_t i) { return noncut_on_both_sides(s, d, i); });
}

bool biblock_r0_hypothesis(const WeightedDigraph& g) {
  if (!is_biblock_graph(g)) return false;
  const SimpleGraph s = underlying_simple_graph(g);
  const BlockDecomposition d = decompose(s);
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (!noncut_on_both_sides(s, d, i)) return false;
  }
  return true;
}

RankOutcome rank_r2_block_graph(const WeightedDigraph& g) {
  if (!r2_block_graph_hypothesis(g)) {
    throw Error(ErrorCode::PreconditionViolated,
                "not an r2-block graph whose other blocks have two noncut vertices each");
  }
  return closed_form(RuleTag::BlockGraph2k, g.order());
}

RankOutcome rank_r2_biblock_graph(const WeightedDigraph& g) {
  if (!r2_biblock_graph_hypothesis(g)) {
    throw Error(ErrorCode::PreconditionViolated,
                "not an r2-biblock graph whose other blocks have noncut vertices on both sides");
  }
  return closed_form(RuleTag::BiblockGraph2k, 2 * decompose(g).block_count());
}

RankOutcome rank_biblock_graph(const WeightedDigraph& g) {
  if (!biblock_r0_hypothesis(g)) {
    throw Error(ErrorCode::PreconditionViolated, "not a biblock graph with noncut vertices on both sides of every block");
  }
  return closed_form(RuleTag::BiblockGraph2k, 2 * decompose(g).block_count());
}

}  // namespace blockrank
