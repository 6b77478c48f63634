#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockrank/digraph.hpp"
#include "blockrank/linalg.hpp"

namespace blockrank {

/// r(M) - r(B) for M = [[alpha, x^T], [y, B]].
enum class CaseTag {
  RankPlus2,  // CASE I
  RankPlus0,  // CASE II
  RankPlus1,  // CASE III
};

std::string_view case_label(CaseTag tag) noexcept;  // "I", "II", "III"
std::size_t rank_increment(CaseTag tag) noexcept;
/// Throws InconsistentClassification when the difference is not 0, 1 or 2.
CaseTag case_from_rank_difference(std::size_t rank_bordered, std::size_t rank_core);

struct MembershipWitnesses {
  bool x_in_row_space = false;           // x^T in rs(B)
  bool y_in_column_space = false;        // y in cs(B)
  bool corner_row_in_row_space = false;  // [alpha x^T] in rs([y B])
  bool corner_column_in_column_space = false;  // [alpha; y] in cs([x^T; B])

  friend bool operator==(const MembershipWitnesses&, const MembershipWitnesses&) = default;
};

/// Four 0/1 characters in the field order above.
std::string membership_bits(const MembershipWitnesses& w);

struct CutVertexCase {
  CaseTag tag = CaseTag::RankPlus1;
  MembershipWitnesses witnesses;
  /// alpha - c^T y where c^T B = x^T; present when x^T in rs(B) and y in cs(B).
  /// This is the corner left after eliminating both borders.
  std::optional<Rational> eliminated_corner;
};

/// Factorizes B once and classifies any number of borders against it.
class BorderedClassifier {
 public:
  explicit BorderedClassifier(const RationalMatrix& b);

  [[nodiscard]] CutVertexCase classify(const Rational& alpha, std::span<const Rational> x,
                                       std::span<const Rational> y) const;
  [[nodiscard]] std::size_t core_rank() const noexcept { return rows_.rank(); }

 private:
  [[nodiscard]] Rational corner(std::span<const Rational> x, std::span<const Rational> y) const;

  RowSpace rows_;
  RowSpace cols_;
  // x^T K y / D is the corner c0^T y for x in rs(B); set when K fits in 32 bits.
  std::vector<std::int64_t> corner_form_;
  std::int64_t corner_den_ = 0;
};

/// Tag decided from the membership facts alone:
///   RankPlus2 iff x^T not in rs(B) and y not in cs(B);
///   RankPlus0 iff both corner memberships hold; RankPlus1 otherwise.
CutVertexCase classify_bordered(const Rational& alpha, std::span<const Rational> x, std::span<const Rational> y,
                                const RationalMatrix& b);

/// A cut vertex v with a side H containing v such that no arc joins H \ v to
/// V(G) \ H.
class CutSplit {
 public:
  /// Throws InvalidSplit if v is not in `side` or an arc crosses.
  static CutSplit make(const WeightedDigraph& g, VertexId v, std::vector<VertexId> side);

  [[nodiscard]] VertexId cut() const noexcept { return cut_; }
  /// H, sorted, including the cut vertex.
  [[nodiscard]] const std::vector<VertexId>& side() const noexcept { return side_; }
  /// H \ v, sorted.
  [[nodiscard]] const std::vector<VertexId>& side_without_cut() const noexcept { return inner_; }
  /// V(G) \ H, sorted.
  [[nodiscard]] const std::vector<VertexId>& rest() const noexcept { return rest_; }

 private:
  VertexId cut_ = 0;
  std::vector<VertexId> side_;
  std::vector<VertexId> inner_;
  std::vector<VertexId> rest_;
};

/// The pieces of A(G) around a split, in the vertex order of the two
/// subdigraphs.
struct SplitParts {
  Subdigraph inner;  // H \ v
  Subdigraph rest;   // G \ H
  Rational alpha;    // loop weight at v (0 if none)
  RationalVector inner_out;  // arcs v -> H \ v
  RationalVector inner_in;   // arcs H \ v -> v
  RationalVector rest_out;   // arcs v -> G \ H
  RationalVector rest_in;    // arcs G \ H -> v
};

SplitParts split_parts(const WeightedDigraph& g, const CutSplit& split);

/// Classifies the split from the H-side border memberships and cross-checks
/// against r(H) - r(H \ v). Throws InconsistentClassification on disagreement.
CutVertexCase classify_cut(const WeightedDigraph& g, const CutSplit& split);

/// One split per connected component C of G - v, with H = C + v, ordered by
/// the smallest vertex of C.
std::vector<CutSplit> natural_splits(const WeightedDigraph& g, VertexId v);

}  // namespace blockrank
