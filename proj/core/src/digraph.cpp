#include "blockrank/digraph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "blockrank/error.hpp"
#include "blockrank/linalg.hpp"

namespace blockrank {

namespace {

bool arc_less(const Arc& a, const Arc& b) { return a.from != b.from ? a.from < b.from : a.to < b.to; }

std::string arc_name(const Arc& a) { return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")"; }

}  // namespace

WeightedDigraph WeightedDigraph::build(std::size_t n, std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) throw Error(ErrorCode::VertexOutOfRange, "arc " + arc_name(a));
    if (a.weight.is_zero()) throw Error(ErrorCode::ZeroWeight, "arc " + arc_name(a));
  }
  if (!std::is_sorted(arcs.begin(), arcs.end(), arc_less)) std::sort(arcs.begin(), arcs.end(), arc_less);
  auto dup = std::adjacent_find(arcs.begin(), arcs.end(),
                                [](const Arc& a, const Arc& b) { return a.from == b.from && a.to == b.to; });
  if (dup != arcs.end()) throw Error(ErrorCode::DuplicateArc, "arc " + arc_name(*dup));
  WeightedDigraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  return g;
}

WeightedDigraph WeightedDigraph::from_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "adjacency matrix must be square");
  std::vector<Arc> arcs;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) arcs.push_back({r, c, m(r, c)});
    }
  }
  WeightedDigraph g;
  g.n_ = m.rows();
  g.arcs_ = std::move(arcs);
  return g;
}

const Arc* WeightedDigraph::find(VertexId u, VertexId v) const {
  Arc key{u, v, {}};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key, arc_less);
  if (it != arcs_.end() && it->from == u && it->to == v) return &*it;
  return nullptr;
}

Weight WeightedDigraph::weight(VertexId u, VertexId v) const {
  const Arc* a = find(u, v);
  return a ? a->weight : Weight{};
}

bool WeightedDigraph::has_arc(VertexId u, VertexId v) const { return find(u, v) != nullptr; }

RationalMatrix WeightedDigraph::adjacency_matrix() const {
  RationalMatrix m(n_, n_);
  for (const Arc& a : arcs_) m(a.from, a.to) = a.weight;
  return m;
}

std::size_t adjacency_rank(const WeightedDigraph& g) {
  const std::size_t n = g.order();
  if (!std::all_of(g.arcs().begin(), g.arcs().end(), [](const Arc& a) { return a.weight.is_integer(); })) {
    return rank_of(g.adjacency_matrix());
  }
  std::array<std::int64_t, 64> local;
  std::vector<std::int64_t> heap;
  std::span<std::int64_t> entries(local.data(), std::min(n * n, local.size()));
  if (n * n > local.size()) {
    heap.assign(n * n, 0);
    entries = heap;
  } else {
    std::fill(entries.begin(), entries.end(), 0);
  }
  for (const Arc& a : g.arcs()) entries[a.from * n + a.to] = a.weight.small_numerator();
  return rank_of(n, n, entries);
}

std::size_t induced_rank(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  const std::size_t k = vertices.size();
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  if (k * k > 64 || g.order() > 64) return adjacency_rank(induced_subdigraph(g, vertices).graph);
  std::array<VertexId, 64> remap;
  std::fill_n(remap.begin(), g.order(), kAbsent);
  for (std::size_t i = 0; i < k; ++i) {
    if (vertices[i] >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(vertices[i]));
    remap[vertices[i]] = i;
  }
  std::array<std::int64_t, 64> entries;
  std::fill_n(entries.begin(), k * k, 0);
  for (const Arc& a : g.arcs()) {
    if (remap[a.from] == kAbsent || remap[a.to] == kAbsent) continue;
    if (!a.weight.is_integer()) return adjacency_rank(induced_subdigraph(g, vertices).graph);
    entries[remap[a.from] * k + remap[a.to]] = a.weight.small_numerator();
  }
  return rank_of(k, k, std::span<const std::int64_t>(entries.data(), k * k));
}

Subdigraph induced_subdigraph(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> remap(g.order(), kAbsent);
  for (VertexId v : vertices) {
    if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    remap[v] = 0;
  }
  Subdigraph out;
  out.original.reserve(vertices.size());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (remap[v] == kAbsent) continue;
    remap[v] = out.original.size();
    out.original.push_back(v);
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) {
    if (remap[a.from] != kAbsent && remap[a.to] != kAbsent) arcs.push_back({remap[a.from], remap[a.to], a.weight});
  }
  // Arcs stay sorted because remap is monotone.
  out.graph = WeightedDigraph::build(out.original.size(), std::move(arcs));
  return out;
}

Subdigraph delete_vertices(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  std::vector<bool> drop(g.order(), false);
  for (VertexId v : vertices) {
    if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    drop[v] = true;
  }
  std::vector<VertexId> keep;
  keep.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subdigraph(g, keep);
}

WeightedDigraph attach_edge(const WeightedDigraph& g, VertexId at, EdgeKind kind, const EdgeWeights& w) {
  if (at >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "anchor " + std::to_string(at));
  const VertexId u = g.order();
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  auto single_arc = [&] {
    if (w.direction == ArcDirection::FromAnchor) {
      arcs.push_back({at, u, w.forward});
    } else {
      arcs.push_back({u, at, w.forward});
    }
  };
  switch (kind) {
    case EdgeKind::SimpleEdge:
      arcs.push_back({at, u, w.forward});
      arcs.push_back({u, at, w.forward});
      break;
    case EdgeKind::NcTildeEdge:
      arcs.push_back({at, u, w.forward});
      arcs.push_back({u, at, w.backward});
      break;
    case EdgeKind::NcTildeArc:
      single_arc();
      break;
    case EdgeKind::NcEdge:
      arcs.push_back({at, u, w.forward});
      arcs.push_back({u, at, w.backward});
      arcs.push_back({u, u, w.loop});
      break;
    case EdgeKind::NcArc:
      single_arc();
      arcs.push_back({u, u, w.loop});
      break;
  }
  return WeightedDigraph::build(g.order() + 1, std::move(arcs));
}

std::optional<EdgeKind> classify_edge(const WeightedDigraph& g, VertexId v, VertexId u) {
  if (v >= g.order() || u >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "classify_edge");
  const bool out = g.has_arc(v, u);
  const bool in = g.has_arc(u, v);
  if (!out && !in) return std::nullopt;
  const bool loop_u = g.has_loop(u);
  if (out && in) {
    if (loop_u) return EdgeKind::NcEdge;
    if (!g.has_loop(v) && g.weight(v, u) == g.weight(u, v)) return EdgeKind::SimpleEdge;
    return EdgeKind::NcTildeEdge;
  }
  return loop_u ? EdgeKind::NcArc : EdgeKind::NcTildeArc;
}

WeightedDigraph disjoint_union(const WeightedDigraph& a, const WeightedDigraph& b) {
  std::vector<Arc> arcs(a.arcs().begin(), a.arcs().end());
  const std::size_t shift = a.order();
  for (const Arc& arc : b.arcs()) arcs.push_back({arc.from + shift, arc.to + shift, arc.weight});
  return WeightedDigraph::build(a.order() + b.order(), std::move(arcs));
}

WeightedDigraph with_loop(const WeightedDigraph& g, VertexId u, const Weight& w) {
  if (u >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size() + 1);
  for (const Arc& a : g.arcs()) {
    if (a.from == u && a.to == u) continue;
    arcs.push_back(a);
  }
  if (!w.is_zero()) arcs.push_back({u, u, w});
  return WeightedDigraph::build(g.order(), std::move(arcs));
}

WeightedDigraph with_arcs(const WeightedDigraph& g, std::span<const Arc> extra) {
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  arcs.insert(arcs.end(), extra.begin(), extra.end());
  return WeightedDigraph::build(g.order(), std::move(arcs));
}

}  // namespace blockrank
