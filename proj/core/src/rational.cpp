#include "blockrank/rational.hpp"

#include <climits>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "blockrank/error.hpp"

namespace blockrank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InconsistentClassification: return "InconsistentClassification";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr i128 kMax = INT64_MAX;
constexpr i128 kMin = -static_cast<i128>(INT64_MAX);  // INT64_MIN is never stored

bool fits(i128 v) { return v >= kMin && v <= kMax; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

std::uint64_t gcd_u128(u128 a, std::uint64_t b) {
  // b is nonzero; reduce a below 2^64 first.
  return std::gcd(static_cast<std::uint64_t>(a % b), b);
}

mpq_class make_mpq(i128 num, i128 den) {
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    auto mag = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == INT64_MIN) {
    assign(mpq_class(mpz_class(static_cast<long>(value))));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (numerator == 0) return;
  const auto g = static_cast<i128>(std::gcd(uabs(numerator), uabs(denominator)));
  i128 n = numerator / g;
  i128 d = denominator / g;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  assign(make_mpq(n, d));
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  assign(copy);
}

void Rational::assign(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != LONG_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(value);
  }
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num_digits = num_part;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!digits_only(num_digits)) return std::nullopt;
  if (slash != std::string_view::npos && !digits_only(den_part)) return std::nullopt;

  mpz_class num(std::string(num_digits), 10);
  if (num_part.front() == '-') num = -num;
  mpz_class den(1);
  if (slash != std::string_view::npos) den = mpz_class(std::string(den_part), 10);
  if (den == 0) return std::nullopt;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign(mpq_class(-*big_));
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      i128 s = static_cast<i128>(num_) + rhs.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
      assign(make_mpq(s, 1));
      return *this;
    }
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_));
    std::int64_t b_g = den_ / static_cast<std::int64_t>(g);
    std::int64_t d_g = rhs.den_ / static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(num_) * d_g + static_cast<i128>(rhs.num_) * b_g;
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    auto mag = t < 0 ? static_cast<u128>(-t) : static_cast<u128>(t);
    std::uint64_t g2 = gcd_u128(mag, g);
    i128 n = t / static_cast<i128>(g2);
    i128 d = static_cast<i128>(b_g) * (rhs.den_ / static_cast<std::int64_t>(g2));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign(make_mpq(n, d));
    return *this;
  }
  assign(mpq_class(to_mpq() + rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = static_cast<std::int64_t>(std::gcd(uabs(num_), static_cast<std::uint64_t>(rhs.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(std::gcd(uabs(rhs.num_), static_cast<std::uint64_t>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign(make_mpq(n, d));
    return *this;
  }
  assign(mpq_class(to_mpq() * rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.big_) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign(mpq_class(to_mpq() / rhs.to_mpq()));
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;  // normalized: a big value never fits the small form
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace blockrank
