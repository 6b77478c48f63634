#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blockrank/matrix.hpp"

namespace blockrank {

struct RankResult {
  std::size_t rank = 0;
  /// Columns of a maximal independent column set, ascending.
  std::vector<std::size_t> pivot_columns;
};

/// Exact rank by fraction-free (Bareiss) elimination with full pivoting.
///
/// Rows are scaled to integers first. Elimination runs on 64-bit words with
/// 128-bit intermediates and restarts on GMP integers if anything overflows.
RankResult rank(const RationalMatrix& m);

inline std::size_t rank_of(const RationalMatrix& m) { return rank(m).rank; }

/// Rank of a row-major integer matrix.
std::size_t rank_of(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);

struct Membership {
  bool member = false;
  /// Witness combination; filled only when member is true.
  RationalVector coefficients;

  explicit operator bool() const noexcept { return member; }
};

/// Reduced row echelon form of a fixed matrix, kept for repeated row-space
/// queries. contains(v) also yields c with c^T M = v.
class RowSpace {
 public:
  explicit RowSpace(const RationalMatrix& m);

  [[nodiscard]] std::size_t rank() const noexcept { return pivots_.size(); }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] Membership solve(std::span<const Rational> v) const;

  [[nodiscard]] std::span<const std::size_t> pivot_columns() const noexcept { return pivots_; }
  /// Row k of E, pairing with pivot column k.
  [[nodiscard]] std::span<const Rational> transform_row(std::size_t k) const {
    return std::span<const Rational>(transform_).subspan(k * rows_, rows_);
  }

 private:
  void build_checks();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<Rational> reduced_;    // pivot rows of the RREF, row-major
  std::vector<Rational> transform_;  // matching rows of E with E*M = RREF
  // Integer basis of ker(M), one row per free column; v in rs(M) iff every
  // row is orthogonal to v. Empty unless it fits in 64-bit words.
  std::vector<std::int64_t> checks_;
  bool checks_small_ = false;
};

/// v in rs(M)? Throws DimensionMismatch unless |v| == cols(M).
Membership in_row_space(std::span<const Rational> v, const RationalMatrix& m);

/// v in cs(M)? Throws DimensionMismatch unless |v| == rows(M).
Membership in_column_space(std::span<const Rational> v, const RationalMatrix& m);

/// The matrix [[alpha, x^T], [y, B]].
RationalMatrix bordered(const Rational& alpha, std::span<const Rational> x, std::span<const Rational> y,
                        const RationalMatrix& b);

}  // namespace blockrank
