#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "blockrank/rational.hpp"

namespace blockrank {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Either dimension may be zero.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  [[nodiscard]] bool is_zero() const noexcept;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] RationalVector column(std::size_t c) const;

  [[nodiscard]] RationalMatrix transpose() const;
  [[nodiscard]] RationalMatrix with_row(std::span<const Rational> row) const;
  [[nodiscard]] RationalMatrix with_column(std::span<const Rational> column) const;
  [[nodiscard]] RationalMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace blockrank
