#include "blockrank/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "blockrank/blocks.hpp"
#include "blockrank/error.hpp"

namespace blockrank {

std::string_view case_label(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::RankPlus2: return "I";
    case CaseTag::RankPlus0: return "II";
    case CaseTag::RankPlus1: return "III";
  }
  return "?";
}

std::size_t rank_increment(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::RankPlus2: return 2;
    case CaseTag::RankPlus0: return 0;
    case CaseTag::RankPlus1: return 1;
  }
  return 0;
}

CaseTag case_from_rank_difference(std::size_t rank_bordered, std::size_t rank_core) {
  if (rank_bordered == rank_core) return CaseTag::RankPlus0;
  if (rank_bordered == rank_core + 1) return CaseTag::RankPlus1;
  if (rank_bordered == rank_core + 2) return CaseTag::RankPlus2;
  throw Error(ErrorCode::InconsistentClassification,
              "rank difference " + std::to_string(rank_bordered) + " - " + std::to_string(rank_core));
}

std::string membership_bits(const MembershipWitnesses& w) {
  std::string s;
  s += w.x_in_row_space ? '1' : '0';
  s += w.y_in_column_space ? '1' : '0';
  s += w.corner_row_in_row_space ? '1' : '0';
  s += w.corner_column_in_column_space ? '1' : '0';
  return s;
}

namespace {

constexpr std::int64_t kFormLimit = std::int64_t{1} << 31;

bool small_int(const Rational& x) {
  return x.is_integer() && x.small_numerator() < kFormLimit && x.small_numerator() > -kFormLimit;
}

}  // namespace

BorderedClassifier::BorderedClassifier(const RationalMatrix& b) : rows_(b), cols_(b.transpose()) {
  const auto pivots = rows_.pivot_columns();
  std::int64_t den = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (const Rational& e : rows_.transform_row(k)) {
      if (!e.is_small()) return;
      const std::int64_t d = e.small_denominator();
      den = den / std::gcd(den, d) * d;
      if (den >= kFormLimit) return;
    }
  }
  std::vector<std::int64_t> form(b.cols() * b.rows(), 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const auto row = rows_.transform_row(k);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::int64_t v = row[i].small_numerator() * (den / row[i].small_denominator());
      if (v >= kFormLimit || v <= -kFormLimit) return;
      form[pivots[k] * b.rows() + i] = v;
    }
  }
  corner_form_ = std::move(form);
  corner_den_ = den;
}

Rational BorderedClassifier::corner(std::span<const Rational> x, std::span<const Rational> y) const {
  if (corner_den_ != 0 && std::all_of(x.begin(), x.end(), small_int) && std::all_of(y.begin(), y.end(), small_int)) {
    __extension__ using i128 = __int128;
    i128 sum = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      i128 inner = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        inner += static_cast<i128>(corner_form_[j * y.size() + i]) * y[i].small_numerator();
      }
      sum += inner * x[j].small_numerator();
    }
    // A numerator past 64 bits takes the exact route below.
    if (sum < INT64_MAX && sum > -INT64_MAX) return Rational(static_cast<std::int64_t>(sum), corner_den_);
  }
  Membership c = rows_.solve(x);
  Rational out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!c.coefficients[i].is_zero() && !y[i].is_zero()) out += c.coefficients[i] * y[i];
  }
  return out;
}

CutVertexCase BorderedClassifier::classify(const Rational& alpha, std::span<const Rational> x,
                                           std::span<const Rational> y) const {
  if (x.size() != rows_.cols() || y.size() != rows_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "border vectors do not match the core matrix");
  }
  CutVertexCase out;
  MembershipWitnesses& w = out.witnesses;
  w.x_in_row_space = rows_.contains(x);
  w.y_in_column_space = cols_.contains(y);

  // [alpha x^T] = c^T [y B] needs c^T B = x^T; the solutions form c0 + ker(B^T),
  // and c^T y sweeps every scalar unless y is orthogonal to ker(B^T), i.e.
  // unless y in cs(B). The column condition is the transpose of this.
  if (w.x_in_row_space && w.y_in_column_space) {
    const Rational corner = this->corner(x, y);
    const bool hit = alpha == corner;
    w.corner_row_in_row_space = hit;
    w.corner_column_in_column_space = hit;
    out.eliminated_corner = alpha - corner;
  } else {
    w.corner_row_in_row_space = w.x_in_row_space;
    w.corner_column_in_column_space = w.y_in_column_space;
  }

  if (!w.x_in_row_space && !w.y_in_column_space) {
    out.tag = CaseTag::RankPlus2;
  } else if (w.corner_row_in_row_space && w.corner_column_in_column_space) {
    out.tag = CaseTag::RankPlus0;
  } else {
    out.tag = CaseTag::RankPlus1;
  }
  return out;
}

CutVertexCase classify_bordered(const Rational& alpha, std::span<const Rational> x, std::span<const Rational> y,
                                const RationalMatrix& b) {
  if (x.size() != b.cols() || y.size() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "border vectors do not match the core matrix");
  }
  return BorderedClassifier(b).classify(alpha, x, y);
}

CutSplit CutSplit::make(const WeightedDigraph& g, VertexId v, std::vector<VertexId> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  for (VertexId u : side) {
    if (u >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(u));
  }
  if (!std::binary_search(side.begin(), side.end(), v)) {
    throw Error(ErrorCode::InvalidSplit, "cut vertex " + std::to_string(v) + " not in H");
  }
  std::vector<char> in_side(g.order(), 0);
  for (VertexId u : side) in_side[u] = 1;
  for (const Arc& a : g.arcs()) {
    const bool from_inner = in_side[a.from] && a.from != v;
    const bool to_inner = in_side[a.to] && a.to != v;
    if ((from_inner && !in_side[a.to]) || (to_inner && !in_side[a.from])) {
      throw Error(ErrorCode::InvalidSplit,
                  "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") crosses the split");
    }
  }
  CutSplit s;
  s.cut_ = v;
  s.side_ = std::move(side);
  for (VertexId u : s.side_) {
    if (u != v) s.inner_.push_back(u);
  }
  for (VertexId u = 0; u < g.order(); ++u) {
    if (!in_side[u]) s.rest_.push_back(u);
  }
  return s;
}

SplitParts split_parts(const WeightedDigraph& g, const CutSplit& split) {
  SplitParts p;
  const VertexId v = split.cut();
  p.inner = induced_subdigraph(g, split.side_without_cut());
  p.rest = induced_subdigraph(g, split.rest());
  p.alpha = g.loop_weight(v);
  p.inner_out.reserve(p.inner.original.size());
  p.inner_in.reserve(p.inner.original.size());
  for (VertexId u : p.inner.original) {
    p.inner_out.push_back(g.weight(v, u));
    p.inner_in.push_back(g.weight(u, v));
  }
  for (VertexId u : p.rest.original) {
    p.rest_out.push_back(g.weight(v, u));
    p.rest_in.push_back(g.weight(u, v));
  }
  return p;
}

CutVertexCase classify_cut(const WeightedDigraph& g, const CutSplit& split) {
  SplitParts p = split_parts(g, split);
  const RationalMatrix core = p.inner.graph.adjacency_matrix();
  BorderedClassifier classifier(core);
  CutVertexCase c = classifier.classify(p.alpha, p.inner_out, p.inner_in);

  const std::size_t rank_h = rank_of(induced_subdigraph(g, split.side()).graph.adjacency_matrix());
  const CaseTag by_rank = case_from_rank_difference(rank_h, classifier.core_rank());
  if (by_rank != c.tag) {
    throw Error(ErrorCode::InconsistentClassification,
                "cut " + std::to_string(split.cut()) + ": memberships say CASE " + std::string(case_label(c.tag)) +
                    ", ranks say CASE " + std::string(case_label(by_rank)));
  }
  return c;
}

std::vector<CutSplit> natural_splits(const WeightedDigraph& g, VertexId v) {
  const SimpleGraph s = underlying_simple_graph(g);
  std::vector<CutSplit> out;
  for (auto& comp : components_without(s, v)) {
    comp.push_back(v);
    out.push_back(CutSplit::make(g, v, std::move(comp)));
  }
  return out;
}

}  // namespace blockrank
