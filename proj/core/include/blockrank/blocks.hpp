#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "blockrank/digraph.hpp"

namespace blockrank {

/// Undirected simple graph with sorted adjacency lists.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> adjacency;

  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency[v].size(); }
};

/// Edge {u, v} (u != v) iff (u, v) or (v, u) is an arc; loops are dropped.
SimpleGraph underlying_simple_graph(const WeightedDigraph& g);

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g);

/// Components of g - v, each sorted; v itself is not included.
std::vector<std::vector<VertexId>> components_without(const SimpleGraph& g, VertexId v);

struct BlockDecomposition {
  /// Vertex sets, each sorted ascending; blocks ordered lexicographically.
  std::vector<std::vector<VertexId>> blocks;
  /// Sorted ascending.
  std::vector<VertexId> cut_vertices;
  /// membership[v] lists the indices of the blocks containing v.
  std::vector<std::vector<std::size_t>> membership;
  /// Block contains at most one cut-vertex.
  std::vector<bool> pendant;

  [[nodiscard]] bool is_cut_vertex(VertexId v) const { return membership[v].size() > 1; }
  /// Cut-vertices (of the whole graph) lying in block i, ascending.
  [[nodiscard]] std::vector<VertexId> cuts_in_block(std::size_t i) const;
  [[nodiscard]] std::size_t block_count() const noexcept { return blocks.size(); }
};

/// Blocks and cut-vertices of the underlying simple graph. Isolated vertices
/// form single-vertex blocks.
BlockDecomposition decompose(const SimpleGraph& g);
BlockDecomposition decompose(const WeightedDigraph& g);

/// Induced subdigraph of block i on its vertices that are not cut-vertices of G.
/// Throws IndexOutOfRange.
Subdigraph breve(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i);

/// m_i = number of cut-vertices of G inside block i.
std::vector<std::size_t> cut_vertex_count_per_block(const BlockDecomposition& d);

}  // namespace blockrank
