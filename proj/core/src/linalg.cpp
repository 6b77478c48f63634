#include "blockrank/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>

#include "blockrank/error.hpp"

namespace blockrank {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

template <class Int>
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;
  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// |v| < 2^31, so a difference of two products stays inside int64.
bool fits_half(std::int64_t v) {
  constexpr std::uint64_t kHalf = (std::uint64_t{1} << 31) - 1;
  return static_cast<std::uint64_t>(v) + kHalf <= 2 * kHalf;
}

// Integer row scaling of a rational matrix into 64-bit words.
std::optional<IntMatrix<std::int64_t>> scale_small(const RationalMatrix& m) {
  IntMatrix<std::int64_t> out{m.rows(), m.cols(), std::vector<std::int64_t>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::int64_t lcm = 1;
    for (const Rational& x : m.row(r)) {
      if (!x.is_small()) return std::nullopt;
      std::int64_t d = x.small_denominator();
      if (d == 1) continue;
      std::int64_t g = std::gcd(lcm, d);
      i128 l = static_cast<i128>(lcm / g) * d;
      if (l > INT64_MAX) return std::nullopt;
      lcm = static_cast<std::int64_t>(l);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      i128 v = static_cast<i128>(x.small_numerator()) * (lcm / x.small_denominator());
      if (v > INT64_MAX || v < -INT64_MAX) return std::nullopt;
      out.at(r, c) = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

IntMatrix<mpz_class> scale_big(const RationalMatrix& m) {
  IntMatrix<mpz_class> out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (const Rational& x : m.row(r)) {
      mpz_class d = x.denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      out.at(r, c) = x.numerator() * (lcm / x.denominator());
    }
  }
  return out;
}

template <class Int>
void swap_pivot_into_place(IntMatrix<Int>& m, std::vector<std::size_t>& colidx, std::size_t k, std::size_t pr,
                           std::size_t pc) {
  if (pr != k) {
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(k, c), m.at(pr, c));
  }
  if (pc != k) {
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, k), m.at(r, pc));
    std::swap(colidx[k], colidx[pc]);
  }
}

RankResult finish(std::vector<std::size_t> colidx, std::size_t rank) {
  colidx.resize(rank);
  std::sort(colidx.begin(), colidx.end());
  return {rank, std::move(colidx)};
}

// Returns nullopt when an intermediate leaves the 64-bit range.
std::optional<RankResult> bareiss_small(IntMatrix<std::int64_t> m) {
  std::vector<std::size_t> colidx(m.cols);
  std::iota(colidx.begin(), colidx.end(), 0);
  std::int64_t prev = 1;
  std::size_t k = 0;
  const std::size_t steps = std::min(m.rows, m.cols);
  for (; k < steps; ++k) {
    std::size_t pr = m.rows;
    std::size_t pc = m.cols;
    std::int64_t best = 0;
    for (std::size_t r = k; r < m.rows; ++r) {
      for (std::size_t c = k; c < m.cols; ++c) {
        std::int64_t v = m.at(r, c);
        if (v == 0) continue;
        std::int64_t mag = v < 0 ? -v : v;
        if (pr == m.rows || mag < best) {
          pr = r;
          pc = c;
          best = mag;
        }
      }
    }
    if (pr == m.rows) break;
    swap_pivot_into_place(m, colidx, k, pr, pc);
    const std::int64_t pivot = m.at(k, k);
    bool narrow = true;
    for (std::size_t r = k; r < m.rows && narrow; ++r) {
      for (std::size_t c = k; c < m.cols; ++c) narrow = narrow && fits_half(m.at(r, c));
    }
    for (std::size_t r = k + 1; r < m.rows; ++r) {
      const std::int64_t lead = m.at(r, k);
      for (std::size_t c = k + 1; c < m.cols; ++c) {
        if (narrow) {
          m.at(r, c) = (pivot * m.at(r, c) - lead * m.at(k, c)) / prev;
          continue;
        }
        i128 v = (static_cast<i128>(pivot) * m.at(r, c) - static_cast<i128>(lead) * m.at(k, c)) / prev;
        if (abs128(v) > INT64_MAX) return std::nullopt;
        m.at(r, c) = static_cast<std::int64_t>(v);
      }
      m.at(r, k) = 0;
    }
    prev = pivot;
  }
  return finish(std::move(colidx), k);
}

RankResult bareiss_big(IntMatrix<mpz_class> m) {
  std::vector<std::size_t> colidx(m.cols);
  std::iota(colidx.begin(), colidx.end(), 0);
  mpz_class prev = 1;
  std::size_t k = 0;
  const std::size_t steps = std::min(m.rows, m.cols);
  for (; k < steps; ++k) {
    std::size_t pr = m.rows;
    std::size_t pc = m.cols;
    std::size_t best = 0;
    for (std::size_t r = k; r < m.rows; ++r) {
      for (std::size_t c = k; c < m.cols; ++c) {
        const mpz_class& v = m.at(r, c);
        if (v == 0) continue;
        std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
        if (pr == m.rows || bits < best) {
          pr = r;
          pc = c;
          best = bits;
        }
      }
    }
    if (pr == m.rows) break;
    swap_pivot_into_place(m, colidx, k, pr, pc);
    const mpz_class pivot = m.at(k, k);
    for (std::size_t r = k + 1; r < m.rows; ++r) {
      const mpz_class lead = m.at(r, k);
      for (std::size_t c = k + 1; c < m.cols; ++c) {
        mpz_class v = pivot * m.at(r, c) - lead * m.at(k, c);
        mpz_divexact(m.at(r, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(r, k) = 0;
    }
    prev = pivot;
  }
  return finish(std::move(colidx), k);
}

constexpr std::size_t kStackEntries = 64;

// Rank-only Bareiss on a caller-owned row-major buffer; nullopt on overflow.
// Bareiss keeps every entry a minor of the input, so the first nonzero pivot
// in each column is as good as any.
std::optional<std::size_t> small_rank_in_place(std::int64_t* a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::int64_t prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t pr = k;
    while (pr < rows && at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != k) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(k, j), at(pr, j));
    }
    const std::int64_t pivot = at(k, c);
    for (std::size_t r = k + 1; r < rows; ++r) {
      const std::int64_t lead = at(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        std::int64_t p1 = 0;
        std::int64_t p2 = 0;
        std::int64_t diff = 0;
        if (!__builtin_mul_overflow(pivot, at(r, j), &p1) && !__builtin_mul_overflow(lead, at(k, j), &p2) &&
            !__builtin_sub_overflow(p1, p2, &diff)) {
          at(r, j) = diff / prev;
          continue;
        }
        const i128 v = (static_cast<i128>(pivot) * at(r, j) - static_cast<i128>(lead) * at(k, j)) / prev;
        if (abs128(v) > INT64_MAX) return std::nullopt;
        at(r, j) = static_cast<std::int64_t>(v);
      }
    }
    prev = pivot;
    ++k;
  }
  return k;
}

}  // namespace

RankResult rank(const RationalMatrix& m) {
  if (m.empty()) return {};
  if (auto small = scale_small(m)) {
    if (auto result = bareiss_small(std::move(*small))) return *result;
  }
  return bareiss_big(scale_big(m));
}

std::size_t rank_of(std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries) {
  if (entries.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count != rows * cols");
  if (rows == 0 || cols == 0) return 0;
  if (entries.size() <= kStackEntries) {
    std::array<std::int64_t, kStackEntries> work;
    std::copy(entries.begin(), entries.end(), work.begin());
    if (auto r = small_rank_in_place(work.data(), rows, cols)) return *r;
  } else if (auto result = bareiss_small(IntMatrix<std::int64_t>{rows, cols, {entries.begin(), entries.end()}})) {
    return result->rank;
  }
  IntMatrix<mpz_class> big{rows, cols, {}};
  big.a.reserve(entries.size());
  for (std::int64_t v : entries) big.a.emplace_back(static_cast<long>(v));
  return bareiss_big(std::move(big)).rank;
}

RowSpace::RowSpace(const RationalMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  // Gauss-Jordan on [M | I], keeping only the nonzero rows at the end.
  const std::size_t width = cols_ + rows_;
  std::vector<Rational> work(rows_ * width);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), work.begin() + static_cast<std::ptrdiff_t>(r * width));
    work[r * width + cols_ + r] = 1;
  }
  auto row = [&](std::size_t r) { return work.data() + r * width; };
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && row(p)[c].is_zero()) ++p;
    if (p == rows_) continue;
    if (p != lead) std::swap_ranges(row(p), row(p) + width, row(lead));
    Rational* l = row(lead);
    const Rational inv = Rational(1) / l[c];
    for (std::size_t j = c; j < width; ++j) {
      if (!l[j].is_zero()) l[j] *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational* x = row(r);
      if (r == lead || x[c].is_zero()) continue;
      const Rational f = x[c];
      for (std::size_t j = c; j < width; ++j) {
        if (!l[j].is_zero()) x[j] -= f * l[j];
      }
    }
    pivots_.push_back(c);
    ++lead;
  }
  reduced_.reserve(lead * cols_);
  transform_.reserve(lead * rows_);
  for (std::size_t k = 0; k < lead; ++k) {
    reduced_.insert(reduced_.end(), row(k), row(k) + cols_);
    transform_.insert(transform_.end(), row(k) + cols_, row(k) + width);
  }
  build_checks();
}

void RowSpace::build_checks() {
  // Free column f gives the kernel vector e_f - sum_k R[k][f] e_{p_k}, scaled
  // by the lcm of its denominators.
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  checks_small_ = true;
  for (std::size_t f = 0; f < cols_ && checks_small_; ++f) {
    if (is_pivot[f]) continue;
    std::int64_t lcm = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Rational& x = reduced_[k * cols_ + f];
      if (!x.is_small()) {
        checks_small_ = false;
        break;
      }
      const std::int64_t d = x.small_denominator();
      i128 l = static_cast<i128>(lcm / std::gcd(lcm, d)) * d;
      if (l > (std::int64_t{1} << 31)) {
        checks_small_ = false;
        break;
      }
      lcm = static_cast<std::int64_t>(l);
    }
    if (!checks_small_) break;
    const std::size_t base = checks_.size();
    checks_.resize(base + cols_, 0);
    checks_[base + f] = lcm;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const Rational& x = reduced_[k * cols_ + f];
      i128 v = -static_cast<i128>(x.small_numerator()) * (lcm / x.small_denominator());
      if (abs128(v) > (std::int64_t{1} << 31)) {
        checks_small_ = false;
        break;
      }
      checks_[base + pivots_[k]] = static_cast<std::int64_t>(v);
    }
  }
  if (!checks_small_) checks_.clear();
}

bool RowSpace::contains(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row vector length != column count");
  if (checks_small_ && std::all_of(v.begin(), v.end(), [](const Rational& x) {
        return x.is_integer() && x.small_numerator() < (std::int64_t{1} << 31) &&
               x.small_numerator() > -(std::int64_t{1} << 31);
      })) {
    for (std::size_t base = 0; base < checks_.size(); base += cols_) {
      i128 dot = 0;
      for (std::size_t j = 0; j < cols_; ++j) dot += static_cast<i128>(checks_[base + j]) * v[j].small_numerator();
      if (dot != 0) return false;
    }
    return true;
  }
  RationalVector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational a = residual[pivots_[k]];
    if (a.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < cols_; ++j) residual[j] -= a * reduced_[k * cols_ + j];
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return x.is_zero(); });
}

Membership RowSpace::solve(std::span<const Rational> v) const {
  if (!contains(v)) return {};
  // In RREF the coordinate on pivot row k is simply v[pivot_k].
  Membership out{true, RationalVector(rows_)};
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational& a = v[pivots_[k]];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < rows_; ++j) out.coefficients[j] += a * transform_[k * rows_ + j];
  }
  return out;
}

Membership in_row_space(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "row vector length != column count");
  return RowSpace(m).solve(v);
}

Membership in_column_space(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "column vector length != row count");
  return RowSpace(m.transpose()).solve(v);
}

RationalMatrix bordered(const Rational& alpha, std::span<const Rational> x, std::span<const Rational> y,
                        const RationalMatrix& b) {
  if (x.size() != b.cols() || y.size() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "border vectors do not match the core matrix");
  }
  RationalMatrix m(b.rows() + 1, b.cols() + 1);
  m(0, 0) = alpha;
  for (std::size_t c = 0; c < b.cols(); ++c) m(0, c + 1) = x[c];
  for (std::size_t r = 0; r < b.rows(); ++r) {
    m(r + 1, 0) = y[r];
    for (std::size_t c = 0; c < b.cols(); ++c) m(r + 1, c + 1) = b(r, c);
  }
  return m;
}

}  // namespace blockrank
