#pragma once

#include "blockrank/digraph.hpp"

namespace blockrank::fixtures {

// Small worked examples with all weights 1. Vertex v_i of each drawing is id i-1.

/// 14 vertices, 7 blocks, cut vertices v1 v2 v4 v6 v8; mixes single arcs,
/// bi-arcs, simple edges and loops.
WeightedDigraph seven_block_digraph();

/// seven_block_digraph with an nc~-edge added at each of its cut vertices
/// (19 vertices) and a loop at v2.
WeightedDigraph seven_block_r2_extension();

/// 10-vertex r2-tree digraph with one nc-arc (v3 -> v1, loop at v3) and one
/// nc~-arc (v5 -> v10).
WeightedDigraph r2_tree_example();

/// 19-vertex block graph with a pendant edge at every cut vertex; cut vertices
/// v2 and v4 carry two pendant edges each.
WeightedDigraph r2_block_graph_example();

/// 20-vertex biblock graph with a pendant edge at every cut vertex.
WeightedDigraph r2_biblock_graph_example();

}  // namespace blockrank::fixtures
