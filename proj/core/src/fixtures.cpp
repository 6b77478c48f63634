#include "blockrank/fixtures.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace blockrank::fixtures {

namespace {

using Pairs = std::initializer_list<std::pair<VertexId, VertexId>>;

// Vertex lists are 1-based, as drawn.
class Sketch {
 public:
  explicit Sketch(std::size_t n) : n_(n) {}

  Sketch& arcs(Pairs list) {
    for (auto [u, v] : list) add(u, v);
    return *this;
  }
  Sketch& edges(Pairs list) {
    for (auto [u, v] : list) {
      add(u, v);
      add(v, u);
    }
    return *this;
  }
  Sketch& loops(std::initializer_list<VertexId> list) {
    for (VertexId u : list) add(u, u);
    return *this;
  }
  [[nodiscard]] WeightedDigraph build() const { return WeightedDigraph::build(n_, arcs_); }

 private:
  void add(VertexId u, VertexId v) { arcs_.push_back({u - 1, v - 1, Weight(1)}); }

  std::size_t n_;
  std::vector<Arc> arcs_;
};

Sketch seven_block_sketch(std::size_t n) {
  Sketch s(n);
  s.arcs({{1, 3}, {3, 2}, {2, 1}, {10, 8}, {12, 11}, {12, 6}, {11, 6}, {13, 4}, {2, 14}})
      .edges({{8, 6}})
      .edges({{1, 5}, {5, 4}, {4, 1}, {1, 8}, {8, 7}, {7, 6}, {6, 1}, {8, 9}, {10, 9}, {1, 7}})
      .loops({4, 11, 7, 10, 3});
  return s;
}

}  // namespace

WeightedDigraph seven_block_digraph() { return seven_block_sketch(14).build(); }

WeightedDigraph seven_block_r2_extension() {
  Sketch s = seven_block_sketch(19);
  s.edges({{2, 15}, {1, 16}, {6, 19}, {18, 8}, {17, 4}}).loops({2});
  return s.build();
}

WeightedDigraph r2_tree_example() {
  return Sketch(10)
      .edges({{1, 2}, {1, 7}, {7, 5}, {5, 8}, {8, 6}, {4, 5}, {7, 9}})
      .arcs({{3, 1}, {5, 10}})
      .loops({3, 1, 8, 5})
      .build();
}

WeightedDigraph r2_block_graph_example() {
  return Sketch(19)
      .edges({{1, 3}, {3, 2}, {2, 1}, {10, 8}, {12, 11}, {12, 6}, {11, 6}, {13, 4}, {2, 14}, {2, 15}, {16, 1},
              {8, 6},  {6, 19}, {1, 5}, {5, 4},   {4, 1},   {1, 8},   {8, 7},   {7, 6},  {6, 1},  {8, 9},
              {10, 9}, {1, 7},  {18, 8}, {17, 4}})
      .build();
}

WeightedDigraph r2_biblock_graph_example() {
  return Sketch(20)
      .edges({{1, 3},  {1, 4},  {2, 3},  {2, 4},  {4, 8},  {4, 9},  {4, 10}, {5, 8},  {5, 9},  {5, 10},
              {1, 20}, {2, 20}, {5, 11}, {5, 12}, {5, 13}, {6, 11}, {6, 12}, {6, 13}, {7, 11}, {7, 12},
              {7, 13}, {3, 14}, {3, 15}, {16, 15}, {14, 16}, {3, 17}, {4, 18}, {5, 19}})
      .build();
}

}  // namespace blockrank::fixtures
