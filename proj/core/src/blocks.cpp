#include "blockrank/blocks.hpp"

#include <algorithm>
#include <string>

#include "blockrank/error.hpp"

namespace blockrank {

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  const auto& a = adjacency[u];
  return std::binary_search(a.begin(), a.end(), v);
}

SimpleGraph underlying_simple_graph(const WeightedDigraph& g) {
  SimpleGraph s{g.order(), std::vector<std::vector<VertexId>>(g.order())};
  std::vector<std::size_t> degree(g.order(), 0);
  for (const Arc& a : g.arcs()) {
    if (a.from == a.to) continue;
    ++degree[a.from];
    ++degree[a.to];
  }
  for (VertexId v = 0; v < g.order(); ++v) s.adjacency[v].reserve(degree[v]);
  for (const Arc& a : g.arcs()) {
    if (a.from == a.to) continue;
    s.adjacency[a.from].push_back(a.to);
    s.adjacency[a.to].push_back(a.from);
  }
  for (auto& adj : s.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return s;
}

namespace {

std::vector<std::vector<VertexId>> components_impl(const SimpleGraph& g, VertexId skip) {
  std::vector<int> seen(g.n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  stack.reserve(g.n);
  for (VertexId s = 0; s < g.n; ++s) {
    if (seen[s] || s == skip) continue;
    std::vector<VertexId> comp;
    comp.reserve(g.n);
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.adjacency[u]) {
        if (!seen[w] && w != skip) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
  return components_impl(g, static_cast<VertexId>(-1));
}

std::vector<std::vector<VertexId>> components_without(const SimpleGraph& g, VertexId v) {
  if (v >= g.n) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  return components_impl(g, v);
}

std::vector<VertexId> BlockDecomposition::cuts_in_block(std::size_t i) const {
  std::vector<VertexId> out;
  for (VertexId v : blocks.at(i)) {
    if (is_cut_vertex(v)) out.push_back(v);
  }
  return out;
}

BlockDecomposition decompose(const SimpleGraph& g) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(g.n, kUnseen);
  std::vector<std::size_t> low(g.n, 0);
  std::vector<VertexId> vstack;
  std::vector<std::vector<VertexId>> blocks;

  struct Frame {
    VertexId u;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t clock = 0;
  vstack.reserve(g.n);
  frames.reserve(g.n);
  blocks.reserve(g.n);

  for (VertexId root = 0; root < g.n; ++root) {
    if (disc[root] != kUnseen) continue;
    if (g.adjacency[root].empty()) {
      disc[root] = clock++;
      blocks.push_back({root});
      continue;
    }
    disc[root] = low[root] = clock++;
    vstack.push_back(root);
    frames.push_back({root, root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < g.adjacency[f.u].size()) {
        VertexId w = g.adjacency[f.u][f.next++];
        if (disc[w] == kUnseen) {
          disc[w] = low[w] = clock++;
          vstack.push_back(w);
          frames.push_back({w, f.u, 0});
        } else if (w != f.parent) {
          low[f.u] = std::min(low[f.u], disc[w]);
        }
        continue;
      }
      const VertexId child = f.u;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId u = frames.back().u;
      low[u] = std::min(low[u], low[child]);
      if (low[child] >= disc[u]) {
        std::vector<VertexId> block{u};
        VertexId x = 0;
        do {
          x = vstack.back();
          vstack.pop_back();
          block.push_back(x);
        } while (x != child);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
    vstack.clear();
  }

  std::sort(blocks.begin(), blocks.end());

  BlockDecomposition d;
  d.blocks = std::move(blocks);
  d.membership.assign(g.n, {});
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (VertexId v : d.blocks[i]) d.membership[v].push_back(i);
  }
  for (VertexId v = 0; v < g.n; ++v) {
    if (d.membership[v].size() > 1) d.cut_vertices.push_back(v);
  }
  d.pendant.resize(d.blocks.size());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    std::size_t cuts = 0;
    for (VertexId v : d.blocks[i]) cuts += d.is_cut_vertex(v) ? 1 : 0;
    d.pendant[i] = cuts <= 1;
  }
  return d;
}

BlockDecomposition decompose(const WeightedDigraph& g) { return decompose(underlying_simple_graph(g)); }

Subdigraph breve(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i) {
  if (i >= d.blocks.size()) throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(i));
  std::vector<VertexId> keep;
  for (VertexId v : d.blocks[i]) {
    if (!d.is_cut_vertex(v)) keep.push_back(v);
  }
  return induced_subdigraph(g, keep);
}

std::vector<std::size_t> cut_vertex_count_per_block(const BlockDecomposition& d) {
  std::vector<std::size_t> out(d.blocks.size(), 0);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (VertexId v : d.blocks[i]) out[i] += d.is_cut_vertex(v) ? 1 : 0;
  }
  return out;
}

}  // namespace blockrank
