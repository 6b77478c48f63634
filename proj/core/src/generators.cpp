#include "blockrank/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

#include "blockrank/blocks.hpp"
#include "blockrank/error.hpp"
#include "blockrank/families.hpp"
#include "blockrank/trees.hpp"
#include "random.hpp"

namespace blockrank {

namespace {

using detail::coin;
using detail::draw_below;

constexpr std::array kFamilies = {
    Family::LooplessBiArcTree, Family::CutLoopBiArcTree, Family::R2TreeDigraph, Family::BlockGraph,
    Family::BiblockGraph,      Family::R2BlockGraph,     Family::R2BiblockGraph, Family::RandomDigraph,
    Family::R2Extension,       Family::R0Digraph,
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

void check_pool(std::span<const Weight> pool) {
  if (pool.empty()) invalid("weight pool is empty");
  for (const Weight& w : pool) {
    if (w.is_zero()) invalid("weight pool contains 0");
  }
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {  // inclusive
  return lo + draw_below(rng, hi - lo + 1);
}

// Accumulates arcs; later writes to the same (u, v) overwrite.
class Builder {
 public:
  Builder(std::mt19937_64& rng, std::span<const Weight> pool) : rng_(rng), pool_(pool) {}

  VertexId vertex() { return n_++; }
  [[nodiscard]] std::size_t order() const noexcept { return n_; }

  const Weight& weight() { return pool_[draw_below(rng_, pool_.size())]; }

  void arc(VertexId u, VertexId v, const Weight& w) { arcs_[{u, v}] = w; }
  void bi_arc(VertexId u, VertexId v) {
    arc(u, v, weight());
    arc(v, u, weight());
  }
  void simple_edge(VertexId u, VertexId v) {
    arc(u, v, Weight(1));
    arc(v, u, Weight(1));
  }
  void loop(VertexId u) { arc(u, u, weight()); }
  // One arc either way, or both.
  void random_edge(VertexId u, VertexId v) {
    switch (draw_below(rng_, 4)) {
      case 0: arc(u, v, weight()); break;
      case 1: arc(v, u, weight()); break;
      default: bi_arc(u, v); break;
    }
  }

  [[nodiscard]] WeightedDigraph build() const {
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (const auto& [key, w] : arcs_) arcs.push_back({key.first, key.second, w});
    return WeightedDigraph::build(n_, std::move(arcs));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64& rng_;
  std::span<const Weight> pool_;
  std::size_t n_ = 0;
  std::map<std::pair<VertexId, VertexId>, Weight> arcs_;
};

// Edges of a uniformly random labelled tree on n vertices via a Pruefer sequence.
std::vector<std::pair<VertexId, VertexId>> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = draw_below(rng, n);
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  for (VertexId c : code) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<VertexId> last;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

WeightedDigraph bi_arc_tree(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool, bool cut_loops) {
  Builder b(rng, pool);
  for (std::size_t i = 0; i < n; ++i) b.vertex();
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : random_tree_edges(n, rng)) {
    b.bi_arc(u, v);
    ++degree[u];
    ++degree[v];
  }
  if (cut_loops) {
    for (VertexId v = 0; v < n; ++v) {
      if (degree[v] >= 2 && coin(rng, 1, 2)) b.loop(v);
    }
  }
  return b.build();
}

WeightedDigraph r2_tree(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool) {
  Builder b(rng, pool);
  for (std::size_t i = 0; i < n; ++i) b.vertex();
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : random_tree_edges(n, rng)) {
    b.bi_arc(u, v);
    ++degree[u];
    ++degree[v];
  }
  // An nc~-edge leaf at every base vertex makes each one a cut vertex.
  for (VertexId v = 0; v < n; ++v) {
    b.bi_arc(v, b.vertex());
    ++degree[v];
  }
  std::vector<VertexId> cuts;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] >= 2) cuts.push_back(v);
  }
  for (VertexId v : cuts) {
    if (coin(rng, 1, 2)) b.loop(v);
  }
  if (cuts.empty()) return b.build();
  const std::size_t extra = draw_below(rng, 4);
  for (std::size_t i = 0; i < extra; ++i) {
    const VertexId v = cuts[draw_below(rng, cuts.size())];
    const VertexId u = b.vertex();
    switch (draw_below(rng, 3)) {
      case 0:  // nc-edge
        b.bi_arc(v, u);
        b.loop(u);
        break;
      case 1:  // nc-arc
        coin(rng, 1, 2) ? b.arc(v, u, b.weight()) : b.arc(u, v, b.weight());
        b.loop(u);
        break;
      default:  // nc~-arc
        coin(rng, 1, 2) ? b.arc(v, u, b.weight()) : b.arc(u, v, b.weight());
        break;
    }
  }
  return b.build();
}

WeightedDigraph block_graph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool) {
  Builder b(rng, pool);
  static constexpr std::array<std::size_t, 5> sizes = {2, 3, 3, 4, 4};
  auto clique = [&](std::vector<VertexId> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) b.simple_edge(vs[i], vs[j]);
    }
  };
  std::size_t first = sizes[draw_below(rng, sizes.size())];
  first = std::min(first, n >= 3 ? n - 1 : n);
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < first; ++i) vs.push_back(b.vertex());
  clique(vs);
  while (b.order() < n) {
    const std::size_t s = std::min(sizes[draw_below(rng, sizes.size())], n - b.order() + 1);
    vs.assign(1, draw_below(rng, b.order()));
    for (std::size_t i = 1; i < s; ++i) vs.push_back(b.vertex());
    clique(vs);
  }
  return b.build();
}

WeightedDigraph sized_block_graph(std::span<const std::size_t> sizes, std::mt19937_64& rng,
                                  std::span<const Weight> pool) {
  Builder b(rng, pool);
  std::vector<VertexId> vs;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 1) invalid("block sizes must be >= 1");
    vs.clear();
    if (k > 0) vs.push_back(draw_below(rng, b.order()));
    while (vs.size() < sizes[k]) vs.push_back(b.vertex());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) b.simple_edge(vs[i], vs[j]);
    }
  }
  return b.build();
}

// Block skeletons whose blocks each keep protected noncut vertices; attach
// points are drawn from the unprotected vertices only.
struct Skeleton {
  std::vector<VertexId> attachable;
  std::vector<char> is_cut;
  std::size_t cuts = 0;

  void grow(std::size_t order) { is_cut.resize(order, 0); }
  void mark_cut(VertexId v) {
    if (!is_cut[v]) {
      is_cut[v] = 1;
      ++cuts;
    }
  }
};

void complete_bipartite(Builder& b, const std::vector<VertexId>& left, const std::vector<VertexId>& right) {
  for (VertexId u : left) {
    for (VertexId w : right) b.simple_edge(u, w);
  }
}

void add_pendant_edges(Builder& b, const Skeleton& sk) {
  const std::size_t order = sk.is_cut.size();
  for (VertexId v = 0; v < order; ++v) {
    if (sk.is_cut[v]) b.simple_edge(v, b.vertex());
  }
}

// Complete blocks K_s, s in {3,4}, each with two protected vertices, then a
// pendant edge at every cut vertex.
WeightedDigraph r2_block_graph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool) {
  Builder b(rng, pool);
  if (n < 2) invalid("r2-block-graph needs n >= 2");
  if (n == 2) {
    b.simple_edge(b.vertex(), b.vertex());
    return b.build();
  }
  Skeleton sk;
  auto clique = [&](const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) b.simple_edge(vs[i], vs[j]);
    }
  };
  const std::size_t first = std::min<std::size_t>(pick(rng, 3, 4), n);
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < first; ++i) vs.push_back(b.vertex());
  clique(vs);
  for (std::size_t i = 2; i < first; ++i) sk.attachable.push_back(vs[i]);
  sk.grow(b.order());
  while (!sk.attachable.empty()) {
    const VertexId t = sk.attachable[draw_below(rng, sk.attachable.size())];
    const std::size_t new_cut = sk.is_cut[t] ? 0 : 1;
    std::size_t s = pick(rng, 3, 4);
    if (b.order() + sk.cuts + new_cut + (s - 1) > n) s = 3;
    if (b.order() + sk.cuts + new_cut + (s - 1) > n) break;
    vs.assign(1, t);
    for (std::size_t i = 1; i < s; ++i) vs.push_back(b.vertex());
    clique(vs);
    for (std::size_t i = 3; i < s; ++i) sk.attachable.push_back(vs[i]);
    sk.grow(b.order());
    sk.mark_cut(t);
  }
  add_pendant_edges(b, sk);
  return b.build();
}

// Complete bipartite blocks K_{a,b}, a, b >= 2, with a protected vertex on
// each side. The attach vertex joins side A. With `pendants`, a pendant edge is then added at
// every cut vertex.
WeightedDigraph biblock_graph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool, bool pendants) {
  Builder b(rng, pool);
  if (n < 2) invalid("biblock families need n >= 2");
  if (n < 4) {
    b.simple_edge(b.vertex(), b.vertex());
    return b.build();
  }
  Skeleton sk;
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  {
    std::size_t a = pick(rng, 2, 3);
    std::size_t c = pick(rng, 2, 3);
    while (a + c > n) (c > 2 ? c : a) -= 1;
    for (std::size_t i = 0; i < a; ++i) left.push_back(b.vertex());
    for (std::size_t i = 0; i < c; ++i) right.push_back(b.vertex());
    complete_bipartite(b, left, right);
    for (std::size_t i = 1; i < a; ++i) sk.attachable.push_back(left[i]);
    for (std::size_t i = 1; i < c; ++i) sk.attachable.push_back(right[i]);
    sk.grow(b.order());
  }
  while (!sk.attachable.empty()) {
    const VertexId t = sk.attachable[draw_below(rng, sk.attachable.size())];
    const std::size_t new_cut = pendants && !sk.is_cut[t] ? 1 : 0;
    const std::size_t used = b.order() + (pendants ? sk.cuts : 0) + new_cut;
    if (used + 3 > n) break;
    std::size_t a = pick(rng, 2, 3);
    std::size_t c = pick(rng, 2, 3);
    while (used + (a - 1) + c > n) (c > 2 ? c : a) -= 1;
    left.assign(1, t);
    right.clear();
    for (std::size_t i = 1; i < a; ++i) left.push_back(b.vertex());
    for (std::size_t i = 0; i < c; ++i) right.push_back(b.vertex());
    complete_bipartite(b, left, right);
    // left[1] and right[0] stay protected.
    for (std::size_t i = 2; i < left.size(); ++i) sk.attachable.push_back(left[i]);
    for (std::size_t i = 1; i < right.size(); ++i) sk.attachable.push_back(right[i]);
    sk.grow(b.order());
    sk.mark_cut(t);
  }
  if (pendants) add_pendant_edges(b, sk);
  return b.build();
}

// Blocks that are r0 at every vertex: rank-one weighted complete bipartite
// blocks with both sides of size >= 2, and a looped vertex joined by one arc.
// At most one arbitrary loopless block is mixed in.
WeightedDigraph r0_digraph_attempt(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool) {
  Builder b(rng, pool);
  if (n < 4) return random_block_digraph(n, rng, pool, false);
  std::vector<VertexId> attachable;
  bool wild_used = false;

  auto bipartite = [&](std::vector<VertexId> left, std::size_t a, std::size_t c) {
    while (left.size() < a) left.push_back(b.vertex());
    std::vector<VertexId> right;
    for (std::size_t i = 0; i < c; ++i) right.push_back(b.vertex());
    std::vector<Weight> u, v, p, q;
    for (std::size_t i = 0; i < a; ++i) {
      u.push_back(b.weight());
      q.push_back(b.weight());
    }
    for (std::size_t j = 0; j < c; ++j) {
      v.push_back(b.weight());
      p.push_back(b.weight());
    }
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        b.arc(left[i], right[j], u[i] * v[j]);
        b.arc(right[j], left[i], p[j] * q[i]);
      }
    }
    for (VertexId x : left) attachable.push_back(x);
    for (VertexId x : right) attachable.push_back(x);
  };

  {
    const std::size_t a = 2;
    const std::size_t c = std::min<std::size_t>(pick(rng, 2, 3), n - 2);
    bipartite({}, a, c);
  }
  while (b.order() < n) {
    const VertexId t = attachable[draw_below(rng, attachable.size())];
    const std::size_t room = n - b.order();
    const std::size_t kind = draw_below(rng, 3);
    if (kind == 0 && room >= 3) {
      const std::size_t a = 2;
      const std::size_t c = std::min<std::size_t>(pick(rng, 2, 3), room - 1);
      bipartite({t}, a, c);
    } else if (kind == 1 && !wild_used && room >= 1) {
      wild_used = true;
      const std::size_t extra = std::min<std::size_t>(pick(rng, 1, 2), room);
      std::vector<VertexId> vs{t};
      for (std::size_t i = 0; i < extra; ++i) vs.push_back(b.vertex());
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) b.random_edge(vs[i], vs[i + 1]);
      if (vs.size() == 3) b.random_edge(vs[2], vs[0]);
      for (std::size_t i = 1; i < vs.size(); ++i) attachable.push_back(vs[i]);
    } else {
      const VertexId u = b.vertex();  // never attachable: removing its loop partner breaks r0
      b.loop(u);
      coin(rng, 1, 2) ? b.arc(u, t, b.weight()) : b.arc(t, u, b.weight());
    }
  }
  return b.build();
}

bool loops_at_cut_vertices(const WeightedDigraph& g, const BlockDecomposition& d) {
  return std::any_of(d.cut_vertices.begin(), d.cut_vertices.end(), [&](VertexId v) { return g.has_loop(v); });
}

WeightedDigraph r0_digraph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    WeightedDigraph g = r0_digraph_attempt(n, rng, pool);
    const BlockDecomposition d = decompose(g);
    if (!loops_at_cut_vertices(g, d) && is_r0_digraph(g, d)) return g;
  }
  invalid("no r0-digraph found for n = " + std::to_string(n));
}

WeightedDigraph generate(const GenSpec& spec, std::mt19937_64& rng) {
  const std::size_t n = spec.n;
  const std::span<const Weight> pool = spec.weight_pool;
  switch (spec.family) {
    case Family::LooplessBiArcTree:
      if (n < 1) invalid("trees need n >= 1");
      return bi_arc_tree(n, rng, pool, false);
    case Family::CutLoopBiArcTree:
      if (n < 1) invalid("trees need n >= 1");
      return bi_arc_tree(n, rng, pool, true);
    case Family::R2TreeDigraph:
      if (n < 1) invalid("trees need n >= 1");
      return r2_tree(n, rng, pool);
    case Family::BlockGraph:
      if (!spec.block_sizes.empty()) return sized_block_graph(spec.block_sizes, rng, pool);
      if (n < 1) invalid("block-graph needs n >= 1");
      return block_graph(n, rng, pool);
    case Family::BiblockGraph: return biblock_graph(n, rng, pool, false);
    case Family::R2BlockGraph: return r2_block_graph(n, rng, pool);
    case Family::R2BiblockGraph: return biblock_graph(n, rng, pool, true);
    case Family::RandomDigraph:
      if (n < 1) invalid("random-digraph needs n >= 1");
      return random_block_digraph(n, rng, pool);
    case Family::R2Extension: {
      const WeightedDigraph base = spec.base ? *spec.base : random_block_digraph(std::max<std::size_t>(n, 1), rng, pool);
      return extend_to_r2(base, pool, rng());
    }
    case Family::R0Digraph:
      if (n < 1) invalid("r0-digraph needs n >= 1");
      return r0_digraph(n, rng, pool);
  }
  invalid("unknown family");
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::LooplessBiArcTree: return "loopless-biarc-tree";
    case Family::CutLoopBiArcTree: return "cutloop-biarc-tree";
    case Family::R2TreeDigraph: return "r2-tree";
    case Family::BlockGraph: return "block-graph";
    case Family::BiblockGraph: return "biblock-graph";
    case Family::R2BlockGraph: return "r2-block-graph";
    case Family::R2BiblockGraph: return "r2-biblock-graph";
    case Family::RandomDigraph: return "random-digraph";
    case Family::R2Extension: return "r2-extension";
    case Family::R0Digraph: return "r0-digraph";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::span<const Family> all_families() noexcept { return kFamilies; }

std::vector<Weight> default_weight_pool() { return {Weight(1), Weight(-1), Weight(2), Weight(1, 2)}; }

bool in_family(const WeightedDigraph& g, Family f) {
  switch (f) {
    case Family::LooplessBiArcTree: return is_loopless_bi_arc_tree(g);
    case Family::CutLoopBiArcTree: return is_cut_loop_bi_arc_tree(g);
    case Family::R2TreeDigraph: return r2_tree_shape(g).has_value();
    case Family::BlockGraph: return is_block_graph(g);
    case Family::BiblockGraph: return biblock_r0_hypothesis(g);
    case Family::R2BlockGraph: return r2_block_graph_hypothesis(g);
    case Family::R2BiblockGraph: return r2_biblock_graph_hypothesis(g);
    case Family::RandomDigraph:
      return g.order() >= 1 && connected_components(underlying_simple_graph(g)).size() == 1;
    case Family::R2Extension: return is_r2_digraph(g, decompose(g));
    case Family::R0Digraph: {
      const BlockDecomposition d = decompose(g);
      return !loops_at_cut_vertices(g, d) && is_r0_digraph(g, d);
    }
  }
  return false;
}

WeightedDigraph gen(const GenSpec& spec) {
  check_pool(spec.weight_pool);
  std::mt19937_64 rng(spec.seed);
  WeightedDigraph g = generate(spec, rng);
  if (!in_family(g, spec.family)) {
    throw Error(ErrorCode::InternalMismatch, "generated graph is not in family " + std::string(family_name(spec.family)));
  }
  return g;
}

WeightedDigraph random_block_digraph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool, bool loops) {
  check_pool(pool);
  Builder b(rng, pool);
  if (n == 0) return b.build();
  b.vertex();
  while (b.order() < n) {
    const std::size_t extra = pick(rng, 1, std::min<std::size_t>(3, n - b.order()));
    std::vector<VertexId> vs{static_cast<VertexId>(draw_below(rng, b.order()))};
    for (std::size_t i = 0; i < extra; ++i) vs.push_back(b.vertex());
    if (vs.size() == 2) {
      b.random_edge(vs[0], vs[1]);
      continue;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) b.random_edge(vs[i], vs[(i + 1) % vs.size()]);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 2; j < vs.size(); ++j) {
        if (!(i == 0 && j + 1 == vs.size()) && coin(rng, 1, 3)) b.random_edge(vs[i], vs[j]);
      }
    }
  }
  if (loops) {
    for (VertexId v = 0; v < n; ++v) {
      if (coin(rng, 1, 4)) b.loop(v);
    }
  }
  return b.build();
}

WeightedDigraph extend_to_r2(const WeightedDigraph& g, std::span<const Weight> pool, std::uint64_t seed) {
  check_pool(pool);
  std::mt19937_64 rng(seed);
  const BlockDecomposition d = decompose(g);
  std::vector<Arc> extra;
  std::size_t order = g.order();
  for (VertexId v : d.cut_vertices) {
    const auto& blocks = d.membership[v];
    if (std::any_of(blocks.begin(), blocks.end(), [&](std::size_t i) { return is_r2_block(g, d, i); })) continue;
    const VertexId u = order++;
    extra.push_back({v, u, pool[draw_below(rng, pool.size())]});
    extra.push_back({u, v, pool[draw_below(rng, pool.size())]});
  }
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  arcs.insert(arcs.end(), extra.begin(), extra.end());
  return WeightedDigraph::build(order, std::move(arcs));
}

PendantInstance gen_pendant_instance(CaseTag wanted, std::size_t max_n, std::uint64_t seed,
                                     std::span<const Weight> pool) {
  check_pool(pool);
  if (max_n < 3) invalid("pendant instances need max_n >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    const std::size_t rest_n = pick(rng, 1, max_n - 2);
    const std::size_t inner_n = pick(rng, 1, std::min<std::size_t>(4, max_n - rest_n));
    const WeightedDigraph rest = random_block_digraph(rest_n, rng, pool);
    const WeightedDigraph inner = random_block_digraph(inner_n, rng, pool);
    const VertexId v = draw_below(rng, rest_n);

    Builder b(rng, pool);
    const WeightedDigraph joined = disjoint_union(rest, inner);
    for (std::size_t i = 0; i < joined.order(); ++i) b.vertex();
    for (const Arc& a : joined.arcs()) b.arc(a.from, a.to, a.weight);
    const std::size_t links = pick(rng, 1, std::min<std::size_t>(3, inner_n));
    for (std::size_t i = 0; i < links; ++i) b.random_edge(v, rest_n + draw_below(rng, inner_n));
    if (coin(rng, 1, 3)) b.loop(v);
    WeightedDigraph g = b.build();

    std::vector<VertexId> side{v};
    for (std::size_t i = 0; i < inner_n; ++i) side.push_back(rest_n + i);
    CutSplit split = CutSplit::make(g, v, side);
    if (classify_cut(g, split).tag == wanted) return {std::move(g), std::move(split)};
  }
  invalid("no pendant instance of the requested case found");
}

WeightedDigraph gen_mdt_instance(std::size_t max_n, std::uint64_t seed, std::span<const Weight> pool) {
  check_pool(pool);
  if (max_n < 3) invalid("mdt instances need max_n >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Builder b(rng, pool);
    if (max_n < 6) {
      // A star of nc~-edges.
      const VertexId c = b.vertex();
      const std::size_t leaves = pick(rng, 2, max_n - 1);
      for (std::size_t i = 0; i < leaves; ++i) b.bi_arc(c, b.vertex());
      if (coin(rng, 1, 2)) b.loop(c);
      return b.build();
    }
    // Hub blocks K_{C,N}: C are the block's cut vertices, N its noncut ones.
    std::vector<VertexId> hubs;
    auto hub_block = [&](std::vector<VertexId> cuts, std::size_t noncut) {
      while (cuts.size() < 2) {
        cuts.push_back(b.vertex());
        hubs.push_back(cuts.back());
      }
      for (std::size_t i = 0; i < noncut; ++i) {
        const VertexId u = b.vertex();
        for (VertexId c : cuts) b.bi_arc(c, u);
      }
      if (coin(rng, 1, 3)) b.random_edge(cuts[0], cuts[1]);
    };
    hub_block({}, pick(rng, 2, 3));
    // Each further block shares one hub and costs noncut + 1 + 1 (its new
    // hub and that hub's nc~-edge); the first costs 2 + noncut + 2.
    std::size_t budget_used = b.order() + hubs.size();
    while (budget_used + 4 <= max_n && coin(rng, 2, 3)) {
      const std::size_t noncut = budget_used + 5 <= max_n ? pick(rng, 2, 3) : 2;
      hub_block({hubs[draw_below(rng, hubs.size())]}, noncut);
      budget_used = b.order() + hubs.size();
    }
    for (VertexId h : hubs) {
      b.bi_arc(h, b.vertex());
      if (coin(rng, 1, 4)) b.loop(h);
    }
    WeightedDigraph g = b.build();
    try {
      (void)rank_mdt(g, decompose(g));
      return g;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolated) throw;
    }
  }
  invalid("no instance satisfying the per-block hypothesis found");
}

}  // namespace blockrank
