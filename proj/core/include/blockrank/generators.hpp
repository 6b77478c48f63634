#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "blockrank/classify.hpp"
#include "blockrank/digraph.hpp"
#include "blockrank/engine.hpp"

namespace blockrank {

enum class Family {
  LooplessBiArcTree,
  CutLoopBiArcTree,
  R2TreeDigraph,
  BlockGraph,
  BiblockGraph,    // every block has noncut vertices on both sides
  R2BlockGraph,    // pendant edge per cut, other blocks with two noncut vertices
  R2BiblockGraph,  // same, noncut vertices on both sides
  RandomDigraph,
  R2Extension,
  R0Digraph,
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
std::span<const Family> all_families() noexcept;

std::vector<Weight> default_weight_pool();

struct GenSpec {
  Family family = Family::RandomDigraph;
  /// Vertex budget. Trees and random digraphs hit it exactly; block families
  /// stay at or below it; the r2-tree and r2-extension families use it for
  /// the base before leaves are added.
  std::size_t n = 8;
  std::uint64_t seed = 0;
  std::vector<Weight> weight_pool = default_weight_pool();
  /// Base digraph for R2Extension; a random digraph of order n when absent.
  std::optional<WeightedDigraph> base;
  /// BlockGraph only: clique sizes (each >= 1), first block then one block per
  /// entry hung off a random earlier vertex. Overrides n when nonempty.
  std::vector<std::size_t> block_sizes;
};

/// Deterministic in the spec. The output is checked against the family's
/// predicate; InternalMismatch if that ever fails. Throws InvalidSpec for an
/// empty or zero-containing pool or an unsatisfiable size.
WeightedDigraph gen(const GenSpec& spec);

/// Attaches an nc~-edge at every cut vertex that does not already carry an
/// r2-block, with weights drawn from the pool.
WeightedDigraph extend_to_r2(const WeightedDigraph& g, std::span<const Weight> pool, std::uint64_t seed);

/// True when g belongs to the family (the predicate gen checks).
bool in_family(const WeightedDigraph& g, Family f);

struct PendantInstance {
  WeightedDigraph graph;
  CutSplit split;
};

/// Random digraph of order at most max_n (>= 3) with a pendant side H at a cut
/// vertex whose split falls in the wanted case.
PendantInstance gen_pendant_instance(CaseTag wanted, std::size_t max_n, std::uint64_t seed,
                                     std::span<const Weight> pool);

/// Random digraph satisfying the per-block hypothesis of rank_mdt: complete
/// bipartite blocks between cut and noncut vertices, with nc~-edges making
/// every hub vertex a cut.
WeightedDigraph gen_mdt_instance(std::size_t max_n, std::uint64_t seed, std::span<const Weight> pool);

/// Random connected digraph built from small blocks.
WeightedDigraph random_block_digraph(std::size_t n, std::mt19937_64& rng, std::span<const Weight> pool,
                                     bool loops = true);

}  // namespace blockrank
