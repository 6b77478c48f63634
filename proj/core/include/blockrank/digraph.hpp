#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockrank/matrix.hpp"
#include "blockrank/rational.hpp"

namespace blockrank {

using VertexId = std::size_t;

struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable weighted digraph on vertices 0..n-1. At most one arc per ordered
/// pair; an arc (u, u) is the loop at u. Stored weights are never zero.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// Throws VertexOutOfRange, DuplicateArc or ZeroWeight.
  static WeightedDigraph build(std::size_t n, std::vector<Arc> arcs);
  /// Nonzero entries become arcs.
  static WeightedDigraph from_matrix(const RationalMatrix& m);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  /// Arcs sorted by (from, to).
  [[nodiscard]] std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Weight of arc (u, v), or zero if absent.
  [[nodiscard]] Weight weight(VertexId u, VertexId v) const;
  [[nodiscard]] bool has_arc(VertexId u, VertexId v) const;
  [[nodiscard]] bool has_loop(VertexId u) const { return has_arc(u, u); }
  [[nodiscard]] Weight loop_weight(VertexId u) const { return weight(u, u); }

  [[nodiscard]] RationalMatrix adjacency_matrix() const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  const Arc* find(VertexId u, VertexId v) const;

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// rank(A(G)); integer weights skip the rational matrix.
std::size_t adjacency_rank(const WeightedDigraph& g);

/// rank(A(G[vertices])); duplicates in `vertices` are not allowed.
std::size_t induced_rank(const WeightedDigraph& g, std::span<const VertexId> vertices);

/// A digraph cut out of a larger one. original[i] is the id, in the parent,
/// of vertex i of `graph`.
struct Subdigraph {
  WeightedDigraph graph;
  std::vector<VertexId> original;
};

/// Induced subdigraph on S (any order, duplicates ignored); vertices keep
/// their relative order. Throws VertexOutOfRange.
Subdigraph induced_subdigraph(const WeightedDigraph& g, std::span<const VertexId> vertices);

/// Induced subdigraph on V(G) \ S.
Subdigraph delete_vertices(const WeightedDigraph& g, std::span<const VertexId> vertices);

enum class EdgeKind {
  SimpleEdge,   // both arcs, equal weight, no loops at either end
  NcTildeEdge,  // both arcs, no loop on the attached vertex
  NcTildeArc,   // one arc, no loop on the attached vertex
  NcEdge,       // both arcs plus a loop on the attached vertex
  NcArc,        // one arc plus a loop on the attached vertex
};

enum class ArcDirection { FromAnchor, ToAnchor };

/// Weights for attach_edge. Unused fields are ignored:
///   SimpleEdge  - forward
///   NcTildeEdge - forward (anchor -> new), backward (new -> anchor)
///   NcTildeArc  - forward, direction
///   NcEdge      - forward, backward, loop
///   NcArc       - forward, direction, loop
struct EdgeWeights {
  Weight forward = 1;
  Weight backward = 1;
  Weight loop = 1;
  ArcDirection direction = ArcDirection::FromAnchor;
};

/// Adds one fresh vertex (id = order()) joined to `at` as prescribed by kind.
WeightedDigraph attach_edge(const WeightedDigraph& g, VertexId at, EdgeKind kind, const EdgeWeights& weights = {});

/// How the pendant vertex u hangs off v, judged only from the arcs between
/// them and the loops; nullopt when u and v are not adjacent.
std::optional<EdgeKind> classify_edge(const WeightedDigraph& g, VertexId v, VertexId u);

/// Disjoint union; vertices of b are shifted by a.order().
WeightedDigraph disjoint_union(const WeightedDigraph& a, const WeightedDigraph& b);

/// Same digraph with the loop at u set to w (w == 0 removes it).
WeightedDigraph with_loop(const WeightedDigraph& g, VertexId u, const Weight& w);

/// Adds arcs to an existing digraph; same checks as build().
WeightedDigraph with_arcs(const WeightedDigraph& g, std::span<const Arc> extra);

}  // namespace blockrank
