#include "blockrank/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>

#include "blockrank/error.hpp"
#include "blockrank/linalg.hpp"
#include "random.hpp"

namespace blockrank {

namespace {

std::size_t direct_rank(const WeightedDigraph& g) { return adjacency_rank(g); }

// Connected with no cut vertex, decided on neighbourhood bitmasks (n <= 64).
bool nonseparable_small(const WeightedDigraph& g) {
  const std::size_t n = g.order();
  std::array<std::uint64_t, 64> adj;
  std::fill_n(adj.begin(), n, 0);
  for (const Arc& a : g.arcs()) {
    if (a.from == a.to) continue;
    adj[a.from] |= std::uint64_t{1} << a.to;
    adj[a.to] |= std::uint64_t{1} << a.from;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto spans = [&](std::uint64_t allowed) {
    std::uint64_t seen = allowed & -allowed;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & allowed & ~seen;
      seen |= frontier;
    }
    return seen == allowed;
  };
  if (!spans(all)) return false;
  if (n <= 2) return true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!spans(all & ~(std::uint64_t{1} << v))) return false;
  }
  return true;
}

std::vector<VertexId> compose(std::span<const VertexId> ids, const std::vector<VertexId>& local) {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (VertexId u : local) out.push_back(ids[u]);
  return out;
}

std::vector<VertexId> identity_ids(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); }

// r(B_i) and r(B_i \ v), computed on demand.
class BlockRanks {
 public:
  BlockRanks(const WeightedDigraph& g, const BlockDecomposition& d)
      : g_(g), d_(d), full_(d.block_count(), kUnknown), pendant_drop_(d.block_count(), kUnknown) {}

  std::size_t block(std::size_t i) {
    if (full_[i] == kUnknown) full_[i] = induced_rank(g_, d_.blocks[i]);
    return full_[i];
  }

  std::size_t block_without(std::size_t i, VertexId v) {
    std::vector<VertexId> rest;
    rest.reserve(d_.blocks[i].size());
    for (VertexId u : d_.blocks[i]) {
      if (u != v) rest.push_back(u);
    }
    return induced_rank(g_, rest);
  }

  // r(B_i) - r(B_i \ v) for a pendant block with its single cut v; kUnknown otherwise.
  std::size_t pendant_drop(std::size_t i) {
    if (pendant_drop_[i] != kUnknown || !d_.pendant[i]) return pendant_drop_[i];
    const auto cuts = d_.cuts_in_block(i);
    if (cuts.size() != 1) return kUnknown;
    pendant_drop_[i] = block(i) - block_without(i, cuts.front());
    return pendant_drop_[i];
  }

  bool r2_block(std::size_t i) { return pendant_drop(i) == 2; }

  bool r2_digraph() {
    for (VertexId v : d_.cut_vertices) {
      const auto& blocks = d_.membership[v];
      if (std::none_of(blocks.begin(), blocks.end(), [&](std::size_t i) { return r2_block(i); })) return false;
    }
    return true;
  }

  bool r0_block(std::size_t i) {
    for (VertexId v : d_.cuts_in_block(i)) {
      if (block(i) != block_without(i, v)) return false;
    }
    return true;
  }

  bool r0_digraph() {
    const std::size_t k = d_.block_count();
    std::size_t failures = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!r0_block(i) && ++failures > 1) return false;
    }
    return true;
  }

  static constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);

 private:
  const WeightedDigraph& g_;
  const BlockDecomposition& d_;
  std::vector<std::size_t> full_;
  std::vector<std::size_t> pendant_drop_;
};

bool loops_at_cuts(const WeightedDigraph& g, const BlockDecomposition& d) {
  return std::any_of(d.cut_vertices.begin(), d.cut_vertices.end(), [&](VertexId v) { return g.has_loop(v); });
}

// Everything a peel at one split needs.
struct Peel {
  CutSplit split;
  SplitParts parts;
  RationalMatrix inner;
  CutVertexCase h_case;
  std::optional<std::size_t> block;
};

Peel analyse(const WeightedDigraph& g, CutSplit split, std::optional<std::size_t> block) {
  Peel p{std::move(split), {}, {}, {}, block};
  p.parts = split_parts(g, p.split);
  p.inner = p.parts.inner.graph.adjacency_matrix();
  p.h_case = BorderedClassifier(p.inner).classify(p.parts.alpha, p.parts.inner_out, p.parts.inner_in);
  return p;
}

bool case2_hypotheses(const Peel& p) {
  if (p.h_case.tag != CaseTag::RankPlus0) return false;
  if (p.parts.alpha.is_zero()) return true;
  const RationalMatrix rest = p.parts.rest.graph.adjacency_matrix();
  if (!RowSpace(rest.transpose()).contains(p.parts.rest_in)) return true;
  return !RowSpace(rest).contains(p.parts.rest_out);
}

class Solver {
 public:
  CertificateNode solve(const WeightedDigraph& g, std::span<const VertexId> ids);

  CertificateNode solve_sub(const Subdigraph& s, std::span<const VertexId> ids) {
    const auto mapped = compose(ids, s.original);
    return solve(s.graph, mapped);
  }

  CertificateNode peel(const WeightedDigraph& g, std::span<const VertexId> ids, const Peel& p);

  CertificateNode r2_closed_form(const WeightedDigraph& g, std::span<const VertexId> ids, const BlockDecomposition& d,
                                 RuleTag rule);
};

CertificateNode Solver::peel(const WeightedDigraph& g, std::span<const VertexId> ids, const Peel& p) {
  const VertexId cut = ids[p.split.cut()];
  switch (p.h_case.tag) {
    case CaseTag::RankPlus2:
      return make_node(RuleTag::CaseIPeel, 2, {solve_sub(p.parts.inner, ids), solve_sub(p.parts.rest, ids)}, p.block,
                       cut);
    case CaseTag::RankPlus0: {
      const Subdigraph kept = delete_vertices(g, p.split.side_without_cut());
      return make_node(RuleTag::R0Peel, 0, {solve_sub(p.parts.inner, ids), solve_sub(kept, ids)}, p.block, cut);
    }
    case CaseTag::RankPlus1:
      break;
  }

  const RationalMatrix rest = p.parts.rest.graph.adjacency_matrix();
  const MembershipWitnesses& w = p.h_case.witnesses;
  // witnesses.x is v's out-row into H\v, witnesses.y its in-column.
  if (w.y_in_column_space && !w.x_in_row_space) {
    const bool independent = !RowSpace(rest.transpose()).contains(p.parts.rest_in);
    return make_node(RuleTag::CaseIIIPeel, independent ? 2 : 1,
                     {solve_sub(p.parts.inner, ids), solve_sub(p.parts.rest, ids)}, p.block, cut);
  }
  if (w.x_in_row_space && !w.y_in_column_space) {
    const bool independent = !RowSpace(rest).contains(p.parts.rest_out);
    return make_node(RuleTag::CaseIIIPeel, independent ? 2 : 1,
                     {solve_sub(p.parts.inner, ids), solve_sub(p.parts.rest, ids)}, p.block, cut);
  }
  // Both H-side borders eliminated; what is left of v is the corner
  // alpha_hat with the G\H borders around A(G\H).
  const CutVertexCase lt = classify_bordered(*p.h_case.eliminated_corner, p.parts.rest_out, p.parts.rest_in, rest);
  CertificateNode corner =
      make_node(RuleTag::CaseIIILt, rank_increment(lt.tag), {solve_sub(p.parts.rest, ids)}, p.block, cut);
  return make_node(RuleTag::CaseIIIPeel, 0, {solve_sub(p.parts.inner, ids), std::move(corner)}, p.block, cut);
}

CertificateNode Solver::r2_closed_form(const WeightedDigraph& g, std::span<const VertexId> ids,
                                       const BlockDecomposition& d, RuleTag rule) {
  std::vector<CertificateNode> children;
  children.reserve(d.block_count());
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    children.push_back(solve_sub(breve(g, d, i), ids));
    if (!children.back().block) children.back().block = i;
  }
  return make_node(rule, 2 * d.cut_vertices.size(), std::move(children));
}

CertificateNode Solver::solve(const WeightedDigraph& g, std::span<const VertexId> ids) {
  if (g.order() == 0) return make_node(RuleTag::DirectRank, 0);
  if (g.order() <= 64 && nonseparable_small(g)) return make_node(RuleTag::DirectRank, direct_rank(g));

  const SimpleGraph s = underlying_simple_graph(g);
  const auto components = connected_components(s);
  if (components.size() > 1) {
    std::vector<CertificateNode> children;
    children.reserve(components.size());
    for (const auto& c : components) children.push_back(solve_sub(induced_subdigraph(g, c), ids));
    return make_node(RuleTag::ComponentSum, 0, std::move(children));
  }

  const BlockDecomposition d = decompose(s);
  if (d.cut_vertices.empty()) return make_node(RuleTag::DirectRank, direct_rank(g));

  BlockRanks ranks(g, d);
  if (ranks.r2_digraph()) return r2_closed_form(g, ids, d, RuleTag::R2Digraph);

  if (!loops_at_cuts(g, d) && ranks.r0_digraph()) {
    std::vector<CertificateNode> children;
    children.reserve(d.block_count());
    for (std::size_t i = 0; i < d.block_count(); ++i) {
      children.push_back(make_node(RuleTag::DirectRank, ranks.block(i), {}, i));
    }
    return make_node(RuleTag::R0Digraph, 0, std::move(children));
  }

  // The cached rank drop of each pendant block picks the case; analyse() then
  // classifies the chosen split by memberships and must agree.
  auto split_at = [&](std::size_t i) {
    Peel p = analyse(g, CutSplit::make(g, d.cuts_in_block(i).front(), d.blocks[i]), i);
    if (rank_increment(p.h_case.tag) != ranks.pendant_drop(i)) {
      throw Error(ErrorCode::InternalMismatch, "block " + std::to_string(i) + ": membership case disagrees with ranks");
    }
    return p;
  };
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (ranks.pendant_drop(i) == 2) return peel(g, ids, split_at(i));
  }
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (ranks.pendant_drop(i) != 0) continue;
    Peel p = split_at(i);
    if (case2_hypotheses(p)) return peel(g, ids, p);
  }
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (ranks.pendant_drop(i) == 1) return peel(g, ids, split_at(i));
  }
  return make_node(RuleTag::DirectRank, direct_rank(g));
}

RankOutcome finish(CertificateNode node) {
  RankOutcome out;
  out.rank = node.rank;
  out.certificate = std::move(node);
  return out;
}

RankOutcome peel_with(const WeightedDigraph& g, const CutSplit& split, CaseTag wanted) {
  const CutVertexCase c = classify_cut(g, split);
  if (c.tag != wanted) {
    precondition("split at " + std::to_string(split.cut()) + " is CASE " + std::string(case_label(c.tag)) +
                 ", expected CASE " + std::string(case_label(wanted)));
  }
  const Peel p = analyse(g, split, std::nullopt);
  if (wanted == CaseTag::RankPlus0 && !case2_hypotheses(p)) {
    precondition("split at " + std::to_string(split.cut()) +
                 " has a nonzero loop and both outer borders dependent on A(G\\H)");
  }
  Solver solver;
  const auto ids = identity_ids(g.order());
  return finish(solver.peel(g, ids, p));
}

BlockDecomposition checked_r2(const WeightedDigraph& g) {
  BlockDecomposition d = decompose(g);
  if (!is_r2_digraph(g, d)) precondition("not an r2-digraph");
  return d;
}

}  // namespace

RankOutcome rank_recursive(const WeightedDigraph& g, const EngineOptions& options) {
  Solver solver;
  const auto ids = identity_ids(g.order());
  RankOutcome out = finish(solver.solve(g, ids));
  if (options.check_oracle) {
    const std::size_t oracle = direct_rank(g);
    if (oracle != out.rank || !certificate_consistent(out.certificate)) {
      throw Error(ErrorCode::InternalMismatch, "certificate rank " + std::to_string(out.rank) +
                                                   " but elimination gives " + std::to_string(oracle));
    }
  }
  return out;
}

RankOutcome rank_case1_peel(const WeightedDigraph& g, const CutSplit& split) {
  return peel_with(g, split, CaseTag::RankPlus2);
}

bool case2_peel_applies(const WeightedDigraph& g, const CutSplit& split) {
  return case2_hypotheses(analyse(g, split, std::nullopt));
}

RankOutcome rank_case2_peel(const WeightedDigraph& g, const CutSplit& split) {
  return peel_with(g, split, CaseTag::RankPlus0);
}

RankOutcome rank_case3_peel(const WeightedDigraph& g, const CutSplit& split) {
  return peel_with(g, split, CaseTag::RankPlus1);
}

bool check_lemma_2rin(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> set(vertices.begin(), vertices.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return direct_rank(g) == direct_rank(delete_vertices(g, set).graph) + 2 * set.size();
}

SubsetRankDrop check_lemma_2rin_subsets(const WeightedDigraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> set(vertices.begin(), vertices.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.size() > 20) throw Error(ErrorCode::InvalidSpec, "too many vertices for subset enumeration");
  for (VertexId v : set) {
    if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }

  const std::size_t base = direct_rank(g);
  SubsetRankDrop out;
  out.every_subset = true;
  const std::size_t m = set.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<VertexId> subset;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1U) subset.push_back(set[j]);
    }
    const bool drop = base == direct_rank(delete_vertices(g, subset).graph) + 2 * subset.size();
    if (!drop) out.every_subset = false;
    if (mask + 1 == (std::size_t{1} << m)) out.full_set = drop;
  }
  return out;
}

bool is_r2_block(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i) {
  if (i >= d.block_count()) throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(i));
  return BlockRanks(g, d).r2_block(i);
}

bool is_r2_digraph(const WeightedDigraph& g, const BlockDecomposition& d) { return BlockRanks(g, d).r2_digraph(); }

bool is_r0_block(const WeightedDigraph& g, const BlockDecomposition& d, std::size_t i) {
  if (i >= d.block_count()) throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(i));
  return BlockRanks(g, d).r0_block(i);
}

bool is_r0_digraph(const WeightedDigraph& g, const BlockDecomposition& d) { return BlockRanks(g, d).r0_digraph(); }

RankOutcome rank_mdt(const WeightedDigraph& g, const BlockDecomposition& d) {
  BlockRanks ranks(g, d);
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    const Subdigraph b = breve(g, d, i);
    if (b.graph.order() == 0) precondition("block " + std::to_string(i) + " has no noncut vertex");
    const std::size_t m_i = d.cuts_in_block(i).size();
    if (ranks.block(i) != direct_rank(b.graph) + 2 * m_i) {
      precondition("block " + std::to_string(i) + " does not lose 2 per cut vertex");
    }
  }
  Solver solver;
  const auto ids = identity_ids(g.order());
  return finish(solver.r2_closed_form(g, ids, d, RuleTag::MdtFormula));
}

RankOutcome rank_r2_digraph(const WeightedDigraph& g, const BlockDecomposition& d) {
  if (!is_r2_digraph(g, d)) precondition("not an r2-digraph");
  Solver solver;
  const auto ids = identity_ids(g.order());
  return finish(solver.r2_closed_form(g, ids, d, RuleTag::R2Digraph));
}

RankOutcome rank_r0_digraph(const WeightedDigraph& g, const BlockDecomposition& d) {
  for (VertexId v : d.cut_vertices) {
    if (g.has_loop(v)) precondition("loop at cut vertex " + std::to_string(v));
  }
  BlockRanks ranks(g, d);
  if (!ranks.r0_digraph()) precondition("fewer than k-1 r0-blocks");
  std::vector<CertificateNode> children;
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    children.push_back(make_node(RuleTag::DirectRank, ranks.block(i), {}, i));
  }
  return finish(make_node(RuleTag::R0Digraph, 0, std::move(children)));
}

bool loop_invariance_check(const WeightedDigraph& g, const BlockDecomposition& d, std::uint64_t seed,
                           std::size_t samples) {
  if (!is_r2_digraph(g, d)) precondition("not an r2-digraph");
  static const Rational pool[] = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                  Rational(7), Rational(1, 2), Rational(-3)};
  std::mt19937_64 rng(seed);
  const std::size_t base = direct_rank(g);
  for (std::size_t s = 0; s < samples; ++s) {
    WeightedDigraph h = g;
    for (VertexId v : d.cut_vertices) h = with_loop(h, v, pool[detail::draw_below(rng, std::size(pool))]);
    if (direct_rank(h) != base) return false;
  }
  return true;
}

WeightedDigraph attach_digraphs(const WeightedDigraph& g, std::span<const Attachment> attachments) {
  WeightedDigraph out = g;
  std::vector<Arc> joins;
  for (const Attachment& a : attachments) {
    if (a.cut >= g.order() || a.graph_vertex >= a.graph.order()) {
      throw Error(ErrorCode::VertexOutOfRange, "attachment endpoint out of range");
    }
    if (a.to_graph.is_zero() || a.from_graph.is_zero()) throw Error(ErrorCode::ZeroWeight, "attachment weight is 0");
    const VertexId w = out.order() + a.graph_vertex;
    joins.push_back({a.cut, w, a.to_graph});
    joins.push_back({w, a.cut, a.from_graph});
    out = disjoint_union(out, a.graph);
  }
  return with_arcs(out, joins);
}

RankOutcome rank_genr2(const WeightedDigraph& g, std::span<const Attachment> attachments) {
  const BlockDecomposition d = checked_r2(g);
  for (const Attachment& a : attachments) {
    if (a.cut >= g.order() || !d.is_cut_vertex(a.cut)) {
      precondition("attachment at " + std::to_string(a.cut) + " is not at a cut vertex");
    }
    if (a.to_graph.is_zero() || a.from_graph.is_zero()) throw Error(ErrorCode::ZeroWeight, "attachment weight is 0");
  }
  Solver solver;
  const auto ids = identity_ids(g.order());
  CertificateNode node = solver.r2_closed_form(g, ids, d, RuleTag::GenR2);
  std::size_t offset = g.order();
  for (const Attachment& a : attachments) {
    auto local = identity_ids(a.graph.order());
    for (auto& u : local) u += offset;
    offset += a.graph.order();
    CertificateNode child = solver.solve(a.graph, local);
    node.rank += child.rank;
    node.children.push_back(std::move(child));
  }
  return finish(std::move(node));
}

WeightedDigraph add_edges(const WeightedDigraph& g, std::span<const EdgeAddition> additions) {
  WeightedDigraph out = g;
  for (const EdgeAddition& e : additions) out = attach_edge(out, e.at, e.kind, e.weights);
  return out;
}

std::size_t rank_delta_cr2(const WeightedDigraph& g, std::span<const EdgeAddition> additions) {
  const BlockDecomposition d = checked_r2(g);
  std::size_t delta = 0;
  for (const EdgeAddition& e : additions) {
    if (e.at >= g.order() || !d.is_cut_vertex(e.at)) {
      precondition("addition at " + std::to_string(e.at) + " is not at a cut vertex");
    }
    if (e.kind == EdgeKind::NcEdge || e.kind == EdgeKind::NcArc) ++delta;
  }
  return delta;
}

}  // namespace blockrank
