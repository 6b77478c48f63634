#include "suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "blockrank/blocks.hpp"
#include "blockrank/classify.hpp"
#include "blockrank/engine.hpp"
#include "blockrank/error.hpp"
#include "blockrank/families.hpp"
#include "blockrank/generators.hpp"
#include "blockrank/linalg.hpp"
#include "blockrank/text_format.hpp"
#include "blockrank/trees.hpp"

namespace blockrank::verify {

namespace {

constexpr std::array<std::string_view, 17> kSuites = {
    "thm-hy",    "obs-1",     "thm-2.2",     "lemma-2rin",     "thm-mdt",        "thm-pen",
    "cor-loops", "thm-genr2", "cor-cr2",     "thm-tt",         "cor-r2tree",     "cor-blockgraph",
    "cor-biblock-r2", "thm-r0", "thm-r0f",   "cor-biblock-r0", "case3",
};

std::size_t oracle(const WeightedDigraph& g) { return rank_of(g.adjacency_matrix()); }

// One instance of a suite: a seeded generator plus whatever it records.
class Instance {
 public:
  Instance(std::size_t index, std::uint64_t seed, const SuiteOptions& opts, std::vector<Failure>& sink)
      : index_(index), opts_(opts), sink_(sink) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }

  std::mt19937_64& rng() { return rng_; }
  std::uint64_t next_seed() { return rng_(); }
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng_);
  }
  bool coin() { return rng_() & 1U; }
  std::size_t max_n() const { return opts_.max_n; }
  const std::vector<Weight>& pool() const { return pool_; }

  void expect(const WeightedDigraph& g, std::size_t expected, std::size_t actual, std::string note = {}) {
    if (expected != actual) sink_.push_back({index_, format_digraph(g), expected, actual, std::move(note)});
  }
  void fail(const WeightedDigraph* g, std::string note) {
    sink_.push_back({index_, g ? format_digraph(*g) : std::string{}, std::nullopt, std::nullopt, std::move(note)});
  }

 private:
  std::size_t index_;
  const SuiteOptions& opts_;
  std::vector<Failure>& sink_;
  std::mt19937_64 rng_;
  std::vector<Weight> pool_ = default_weight_pool();
};

WeightedDigraph from_family(Instance& in, Family f, std::size_t lo) {
  GenSpec spec;
  spec.family = f;
  spec.n = in.pick(lo, in.max_n());
  spec.seed = in.next_seed();
  return gen(spec);
}

WeightedDigraph r2_base(Instance& in) {
  GenSpec spec;
  spec.family = Family::R2Extension;
  spec.n = in.pick(2, std::min<std::size_t>(8, std::max<std::size_t>(2, in.max_n() / 2)));
  spec.seed = in.next_seed();
  return gen(spec);
}

Weight draw_weight(Instance& in) { return in.pool()[in.pick(0, in.pool().size() - 1)]; }

// Bordered matrices with planted memberships so that every case shows up.
void thm_hy(Instance& in) {
  const std::size_t k = in.pick(1, std::max<std::size_t>(1, in.max_n() - 1));
  auto entry = [&] { return in.pick(0, 2) == 0 ? Weight(0) : draw_weight(in); };
  RationalMatrix b(k, k);
  if (in.coin()) {
    const std::size_t r = in.pick(0, k - 1);
    RationalMatrix p(k, r);
    RationalMatrix q(r, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < r; ++j) p(i, j) = entry();
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) q(i, j) = entry();
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t t = 0; t < r; ++t) b(i, j) += p(i, t) * q(t, j);
      }
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) b(i, j) = entry();
    }
  }
  RationalVector c(k);
  RationalVector d(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = entry();
    d[i] = entry();
  }
  const bool x_planted = in.coin();
  const bool y_planted = in.coin();
  RationalVector x(k);
  RationalVector y(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (x_planted) x[j] += c[i] * b(i, j);
      if (y_planted) y[j] += b(j, i) * d[i];
    }
    if (!x_planted) x[j] = entry();
    if (!y_planted) y[j] = entry();
  }
  Rational alpha = entry();
  if (x_planted && y_planted && in.coin()) {
    alpha = 0;
    for (std::size_t j = 0; j < k; ++j) alpha += x[j] * d[j];
  }
  const CutVertexCase c_case = classify_bordered(alpha, x, y, b);
  const RationalMatrix m = bordered(alpha, x, y, b);
  const CaseTag by_rank = case_from_rank_difference(rank_of(m), rank_of(b));
  in.expect(WeightedDigraph::from_matrix(m), rank_increment(by_rank), rank_increment(c_case.tag),
            "membership case vs rank difference (vertex 0 is the border)");
}

void obs_1(Instance& in) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const WeightedDigraph g = random_block_digraph(in.pick(3, in.max_n()), in.rng(), in.pool());
    const BlockDecomposition d = decompose(g);
    if (d.cut_vertices.empty()) continue;
    const VertexId v = d.cut_vertices[in.pick(0, d.cut_vertices.size() - 1)];
    const auto splits = natural_splits(g, v);
    // H may be a union of several components of G - v.
    std::vector<VertexId> side{v};
    for (const CutSplit& s : splits) {
      if (in.coin()) side.insert(side.end(), s.side_without_cut().begin(), s.side_without_cut().end());
    }
    const CutSplit split = CutSplit::make(g, v, side);
    const CutVertexCase c = classify_cut(g, split);
    const std::size_t rh = oracle(induced_subdigraph(g, split.side()).graph);
    const std::size_t rhv = oracle(induced_subdigraph(g, split.side_without_cut()).graph);
    in.expect(g, rh - rhv, rank_increment(c.tag), "r(H) - r(H\\v) at cut " + std::to_string(v));
    return;
  }
  in.fail(nullptr, "no separable digraph drawn");
}

void thm_2_2(Instance& in) {
  const PendantInstance p = gen_pendant_instance(CaseTag::RankPlus2, std::max<std::size_t>(3, in.max_n()),
                                                 in.next_seed(), in.pool());
  in.expect(p.graph, oracle(p.graph), rank_case1_peel(p.graph, p.split).rank, "CASE I peel");
}

void lemma_2rin(Instance& in) {
  WeightedDigraph g;
  std::vector<VertexId> chosen;
  if (in.coin()) {
    g = r2_base(in);
    chosen = decompose(g).cut_vertices;
    std::shuffle(chosen.begin(), chosen.end(), in.rng());
  } else {
    g = random_block_digraph(in.pick(2, in.max_n()), in.rng(), in.pool());
    for (VertexId v = 0; v < g.order(); ++v) chosen.push_back(v);
    std::shuffle(chosen.begin(), chosen.end(), in.rng());
  }
  chosen.resize(std::min<std::size_t>(chosen.size(), in.pick(0, 4)));

  const std::size_t base = oracle(g);
  auto drops_fully = [&](std::span<const VertexId> s) {
    return base == oracle(delete_vertices(g, s).graph) + 2 * s.size();
  };
  bool every = true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << chosen.size()); ++mask) {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (mask >> i & 1U) s.push_back(chosen[i]);
    }
    every = every && drops_fully(s);
  }
  const bool full = drops_fully(chosen);
  in.expect(g, every, full, "full drop vs drop on every subset");
  const SubsetRankDrop lib = check_lemma_2rin_subsets(g, chosen);
  in.expect(g, full, lib.full_set, "library full-set drop");
  in.expect(g, every, lib.every_subset, "library subset drop");
  in.expect(g, full, check_lemma_2rin(g, chosen), "check_lemma_2rin");
}

void thm_mdt(Instance& in) {
  const WeightedDigraph g = gen_mdt_instance(std::max<std::size_t>(3, in.max_n()), in.next_seed(), in.pool());
  in.expect(g, oracle(g), rank_mdt(g, decompose(g)).rank, "block formula");
}

void thm_pen(Instance& in) {
  const WeightedDigraph g = r2_base(in);
  in.expect(g, oracle(g), rank_r2_digraph(g, decompose(g)).rank, "r2-digraph formula");
}

void cor_loops(Instance& in) {
  const WeightedDigraph g = r2_base(in);
  const bool same = loop_invariance_check(g, decompose(g), in.next_seed(), 10);
  in.expect(g, 1, same, "rank unchanged under cut-vertex loop changes");
}

WeightedDigraph r2_with_cuts(Instance& in, BlockDecomposition& d) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    WeightedDigraph g = r2_base(in);
    d = decompose(g);
    if (!d.cut_vertices.empty()) return g;
  }
  throw Error(ErrorCode::InvalidSpec, "no separable r2-digraph drawn");
}

void thm_genr2(Instance& in) {
  BlockDecomposition d;
  const WeightedDigraph g = r2_with_cuts(in, d);
  std::vector<Attachment> atts(in.pick(0, 3));
  for (Attachment& a : atts) {
    a.graph = random_block_digraph(in.pick(1, 3), in.rng(), in.pool());
    a.graph_vertex = in.pick(0, a.graph.order() - 1);
    a.cut = d.cut_vertices[in.pick(0, d.cut_vertices.size() - 1)];
    a.to_graph = draw_weight(in);
    a.from_graph = draw_weight(in);
  }
  const WeightedDigraph joined = attach_digraphs(g, atts);
  in.expect(joined, oracle(joined), rank_genr2(g, atts).rank, "attachment formula");
}

void cor_cr2(Instance& in) {
  BlockDecomposition d;
  const WeightedDigraph g = r2_with_cuts(in, d);
  std::vector<EdgeAddition> adds(in.pick(0, 3));
  std::size_t nc = 0;
  for (EdgeAddition& e : adds) {
    e.at = d.cut_vertices[in.pick(0, d.cut_vertices.size() - 1)];
    e.kind = static_cast<EdgeKind>(in.pick(0, 4));
    e.weights = {draw_weight(in), draw_weight(in), draw_weight(in),
                 in.coin() ? ArcDirection::FromAnchor : ArcDirection::ToAnchor};
    if (e.kind == EdgeKind::NcEdge || e.kind == EdgeKind::NcArc) ++nc;
  }
  const WeightedDigraph grown = add_edges(g, adds);
  const std::size_t delta = oracle(grown) - oracle(g);
  in.expect(grown, delta, rank_delta_cr2(g, adds), "rank delta");
  in.expect(grown, delta, nc, "rank delta vs nc additions");
}

void thm_tt(Instance& in) {
  const WeightedDigraph t = from_family(in, Family::LooplessBiArcTree, 1);
  const std::size_t r = oracle(t);
  in.expect(t, r, rank_tree(t).rank, "2q");
  in.expect(t, r, 2 * max_matching(underlying_simple_graph(t)).size, "twice the matching number");
}

void cor_r2tree(Instance& in) {
  const WeightedDigraph t = from_family(in, Family::R2TreeDigraph, 1);
  in.expect(t, oracle(t), rank_r2_tree(t).rank, "2q + s");
}

void cor_blockgraph(Instance& in) {
  const WeightedDigraph g = from_family(in, Family::R2BlockGraph, 2);
  in.expect(g, g.order(), oracle(g), "nonsingular");
  in.expect(g, oracle(g), rank_r2_block_graph(g).rank, "closed form");
}

void cor_biblock_r2(Instance& in) {
  const WeightedDigraph g = from_family(in, Family::R2BiblockGraph, 2);
  const std::size_t k = decompose(g).block_count();
  in.expect(g, 2 * k, oracle(g), "2k");
  in.expect(g, oracle(g), rank_r2_biblock_graph(g).rank, "closed form");
}

void thm_r0(Instance& in) {
  const std::size_t max_n = std::max<std::size_t>(3, in.max_n());
  for (int attempt = 0; attempt < 100; ++attempt) {
    const PendantInstance p = gen_pendant_instance(CaseTag::RankPlus0, max_n, in.next_seed(), in.pool());
    if (!case2_peel_applies(p.graph, p.split)) continue;
    in.expect(p.graph, oracle(p.graph), rank_case2_peel(p.graph, p.split).rank, "CASE II peel");
    return;
  }
  in.fail(nullptr, "no CASE II instance meeting the hypotheses drawn");
}

void thm_r0f(Instance& in) {
  const WeightedDigraph g = from_family(in, Family::R0Digraph, 1);
  in.expect(g, oracle(g), rank_r0_digraph(g, decompose(g)).rank, "sum of block ranks");
}

void cor_biblock_r0(Instance& in) {
  const WeightedDigraph g = from_family(in, Family::BiblockGraph, 2);
  const std::size_t k = decompose(g).block_count();
  in.expect(g, 2 * k, oracle(g), "2k");
  in.expect(g, 2 * k, rank_biblock_graph(g).rank, "closed form");
}

void case3(Instance& in) {
  if (in.coin()) {
    const PendantInstance p = gen_pendant_instance(CaseTag::RankPlus1, std::max<std::size_t>(3, in.max_n()),
                                                   in.next_seed(), in.pool());
    in.expect(p.graph, oracle(p.graph), rank_case3_peel(p.graph, p.split).rank, "CASE III peel");
    return;
  }
  // Block graphs of cliques K_3 and up: every pendant block is CASE III.
  GenSpec spec;
  spec.family = Family::BlockGraph;
  spec.seed = in.next_seed();
  std::size_t order = 0;
  const std::size_t budget = std::max<std::size_t>(3, in.max_n());
  while (true) {
    const std::size_t s = in.pick(3, 5);
    const std::size_t grown = order == 0 ? s : order + s - 1;
    if (grown > budget) break;
    spec.block_sizes.push_back(s);
    order = grown;
  }
  if (spec.block_sizes.empty()) spec.block_sizes.push_back(budget);
  const WeightedDigraph g = gen(spec);
  in.expect(g, oracle(g), rank_recursive(g, {.check_oracle = false}).rank, "recursive rank");
}

using SuiteFn = void (*)(Instance&);

SuiteFn lookup(std::string_view name) {
  static constexpr std::array<SuiteFn, kSuites.size()> fns = {
      thm_hy,  obs_1,      thm_2_2,        lemma_2rin,     thm_mdt, thm_pen, cor_loops,      thm_genr2, cor_cr2,
      thm_tt,  cor_r2tree, cor_blockgraph, cor_biblock_r2, thm_r0,  thm_r0f, cor_biblock_r0, case3,
  };
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (kSuites[i] == name) return fns[i];
  }
  throw Error(ErrorCode::UnknownSuite, std::string(name));
}

}  // namespace

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const SuiteFn fn = lookup(name);
  SuiteReport report;
  report.suite = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < options.count; ++i) {
    Instance in(i, options.seed, options, report.failures);
    try {
      fn(in);
    } catch (const Error& e) {
      in.fail(nullptr, e.what());
    }
    ++report.instances;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " instances=" << report.instances << " failures=" << report.failures.size()
      << " seconds=" << report.wall_seconds << ' ' << (report.passed() ? "PASS" : "FAIL") << '\n';
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const Failure& f : report.failures) {
    out << "failure instance=" << f.instance << " expected=" << opt(f.expected) << " actual=" << opt(f.actual)
        << " note=" << f.note << '\n';
    std::istringstream lines(f.graph);
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : report.failures) {
    failures.push_back({{"instance", f.instance},
                        {"graph", f.graph},
                        {"expected", f.expected ? nlohmann::json(*f.expected) : nlohmann::json()},
                        {"actual", f.actual ? nlohmann::json(*f.actual) : nlohmann::json()},
                        {"note", f.note}});
  }
  return {{"suite", report.suite},
          {"instances", report.instances},
          {"passed", report.passed()},
          {"wall_seconds", report.wall_seconds},
          {"failures", std::move(failures)}};
}

}  // namespace blockrank::verify
