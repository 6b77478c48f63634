#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace blockrank {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline and never touch the heap; anything larger is promoted to a shared,
/// immutable GMP rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Accepts `p` or `p/q` with an optional leading sign on `p`; `q` must be a
  /// positive decimal integer. Returns nullopt on any syntax error or q == 0.
  static std::optional<Rational> parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return !big_ && den_ == 1; }
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] int sign() const noexcept;

  /// Only meaningful when is_small().
  [[nodiscard]] std::int64_t small_numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t small_denominator() const noexcept { return den_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void assign(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

using Weight = Rational;

}  // namespace blockrank
