#include "blockrank/trees.hpp"

#include <algorithm>

#include "blockrank/error.hpp"

namespace blockrank {

namespace {

bool is_tree(const SimpleGraph& s) {
  return s.n >= 1 && s.edge_count() + 1 == s.n && connected_components(s).size() == 1;
}

// Every underlying edge carried by both arcs.
bool bi_arc(const WeightedDigraph& g) {
  for (const Arc& a : g.arcs()) {
    if (a.from != a.to && !g.has_arc(a.to, a.from)) return false;
  }
  return true;
}

bool loops_only_at_cuts(const WeightedDigraph& g, const SimpleGraph& s) {
  for (VertexId v = 0; v < g.order(); ++v) {
    // In a tree the cut vertices are exactly the vertices of degree >= 2.
    if (g.has_loop(v) && s.degree(v) < 2) return false;
  }
  return true;
}

bool nc_tilde_edge_at_every_cut(const WeightedDigraph& g, const SimpleGraph& s) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (s.degree(v) < 2) continue;
    const bool found = std::any_of(s.adjacency[v].begin(), s.adjacency[v].end(), [&](VertexId u) {
      if (s.degree(u) != 1) return false;
      const auto kind = classify_edge(g, v, u);
      return kind == EdgeKind::NcTildeEdge || kind == EdgeKind::SimpleEdge;
    });
    if (!found) return false;
  }
  return true;
}

std::size_t matching_number(const WeightedDigraph& g) { return max_matching(underlying_simple_graph(g)).size; }

}  // namespace

std::string_view tree_kind_name(TreeKind kind) noexcept {
  switch (kind) {
    case TreeKind::LooplessBiArc: return "loopless-biarc";
    case TreeKind::CutLoopBiArc: return "cutloop-biarc";
    case TreeKind::R2Tree: return "r2-tree";
  }
  return "?";
}

std::optional<R2TreeShape> r2_tree_shape(const WeightedDigraph& g) {
  const SimpleGraph s = underlying_simple_graph(g);
  if (!is_tree(s)) return std::nullopt;

  R2TreeShape shape;
  std::vector<char> attached(g.order(), 0);
  for (VertexId u = 0; u < g.order(); ++u) {
    if (s.degree(u) != 1) continue;
    const VertexId v = s.adjacency[u].front();
    if (s.degree(v) < 2) continue;
    const auto kind = classify_edge(g, v, u);
    if (kind == EdgeKind::NcEdge || kind == EdgeKind::NcArc || kind == EdgeKind::NcTildeArc) {
      attached[u] = 1;
      shape.attachments.push_back(u);
      if (kind != EdgeKind::NcTildeArc) ++shape.s;
    }
  }
  for (VertexId u = 0; u < g.order(); ++u) {
    if (!attached[u]) shape.core.push_back(u);
  }

  const WeightedDigraph core = induced_subdigraph(g, shape.core).graph;
  const SimpleGraph cs = underlying_simple_graph(core);
  if (!bi_arc(core) || !loops_only_at_cuts(core, cs) || !nc_tilde_edge_at_every_cut(core, cs)) return std::nullopt;
  // Attachments must hang off cut vertices of the core.
  for (VertexId u : shape.attachments) {
    const VertexId v = s.adjacency[u].front();
    const auto pos = std::lower_bound(shape.core.begin(), shape.core.end(), v) - shape.core.begin();
    if (cs.degree(static_cast<VertexId>(pos)) < 2) return std::nullopt;
  }
  return shape;
}

bool is_loopless_bi_arc_tree(const WeightedDigraph& g) {
  return is_tree(underlying_simple_graph(g)) && bi_arc(g) &&
         std::none_of(g.arcs().begin(), g.arcs().end(), [](const Arc& a) { return a.from == a.to; });
}

bool is_cut_loop_bi_arc_tree(const WeightedDigraph& g) {
  const SimpleGraph s = underlying_simple_graph(g);
  return is_tree(s) && bi_arc(g) && loops_only_at_cuts(g, s);
}

std::optional<TreeKind> classify_tree(const WeightedDigraph& g) {
  const SimpleGraph s = underlying_simple_graph(g);
  if (!is_tree(s)) return std::nullopt;
  const bool biarc = bi_arc(g);
  const bool any_loop =
      std::any_of(g.arcs().begin(), g.arcs().end(), [](const Arc& a) { return a.from == a.to; });
  if (biarc && !any_loop) return TreeKind::LooplessBiArc;
  if (r2_tree_shape(g)) return TreeKind::R2Tree;
  if (biarc && loops_only_at_cuts(g, s)) return TreeKind::CutLoopBiArc;
  return std::nullopt;
}

Matching max_matching(const SimpleGraph& forest) {
  const std::size_t components = connected_components(forest).size();
  if (forest.edge_count() + components != forest.n) throw Error(ErrorCode::NotAForest, "graph has a cycle");

  Matching m;
  std::vector<std::size_t> degree(forest.n);
  std::vector<char> removed(forest.n, 0);
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < forest.n; ++v) {
    degree[v] = forest.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }
  auto remove = [&](VertexId v) {
    removed[v] = 1;
    for (VertexId w : forest.adjacency[v]) {
      if (removed[w]) continue;
      if (--degree[w] == 1) leaves.push_back(w);
    }
  };
  while (!leaves.empty()) {
    const VertexId u = leaves.back();
    leaves.pop_back();
    if (removed[u] || degree[u] != 1) continue;
    const auto& adj = forest.adjacency[u];
    const VertexId w = *std::find_if(adj.begin(), adj.end(), [&](VertexId x) { return !removed[x]; });
    m.edges.emplace_back(std::min(u, w), std::max(u, w));
    removed[u] = 1;
    remove(w);
  }
  m.size = m.edges.size();
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

RankOutcome rank_tree(const WeightedDigraph& t) {
  if (classify_tree(t) != TreeKind::LooplessBiArc) {
    throw Error(ErrorCode::PreconditionViolated, "not a loopless bi-arc tree");
  }
  RankOutcome out;
  out.rank = 2 * matching_number(t);
  out.certificate = make_node(RuleTag::TreeMatching, out.rank);
  return out;
}

R2TreeRank rank_r2_tree(const WeightedDigraph& t) {
  const auto kind = classify_tree(t);
  R2TreeRank out;
  if (kind == TreeKind::LooplessBiArc) {
    out.q = matching_number(t);
  } else if (kind == TreeKind::R2Tree) {
    const auto shape = r2_tree_shape(t);
    out.q = matching_number(induced_subdigraph(t, shape->core).graph);
    out.s = shape->s;
  } else {
    throw Error(ErrorCode::PreconditionViolated, "not an r2-tree digraph");
  }
  out.rank = 2 * out.q + out.s;
  out.certificate = make_node(kind == TreeKind::R2Tree ? RuleTag::R2Tree : RuleTag::TreeMatching, out.rank);
  return out;
}

}  // namespace blockrank
