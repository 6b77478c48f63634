#include "blockrank/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "blockrank/error.hpp"

namespace blockrank {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  RationalMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.data_.reserve(m.rows_ * m.cols_);
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    m.data_.insert(m.data_.end(), r.begin(), r.end());
  }
  return m;
}

bool RationalMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::with_row(std::span<const Rational> row) const {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
  RationalMatrix out = *this;
  out.data_.insert(out.data_.end(), row.begin(), row.end());
  ++out.rows_;
  return out;
}

RationalMatrix RationalMatrix::with_column(std::span<const Rational> column) const {
  if (column.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "appended column has wrong length");
  RationalMatrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    out(r, cols_) = column[r];
  }
  return out;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw Error(ErrorCode::IndexOutOfRange, "submatrix index");
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace blockrank
