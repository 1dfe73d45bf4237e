#ifndef MPBERN_CORE_HPP
#define MPBERN_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mpbern {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. gmpxx keeps arithmetic results in lowest
/// terms with a positive denominator; values built from raw parts go through
/// make_rational() so the same holds everywhere.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& x);

/// Parses "num/den" or "num"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// 1 / m^k for any integer k; negative k puts m^{-k} in the numerator.
Rational inverse_power(std::int64_t m, int k);

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

/// (-1)^e as +1 / -1.
constexpr int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// An index k = (k1, ..., kr), r >= 1, with integer entries of any sign.
class Index {
 public:
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts);

  /// Comma-separated integers, whitespace ignored: "1, -2,3".
  /// Throws std::invalid_argument naming the offending character position.
  static Index parse(std::string_view text);

  std::size_t depth() const { return parts_.size(); }
  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int last() const { return parts_.back(); }

  /// k with only the last entry decremented by one.
  Index with_last_decremented() const;

  /// Canonical text form, "1,-2,3".
  std::string to_string() const;

  friend auto operator<=>(const Index&, const Index&) = default;
  friend bool operator==(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Index& k);

std::int64_t weight(const Index& k);
Index plus_part(const Index& k);
std::int64_t wt_plus(const Index& k);

/// A prime number, checked by trial division on construction.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  std::int64_t value() const { return p_; }
  bool is_odd() const { return p_ != 2; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

/// p-adic valuation; ord_p(0) is the distinguished infinite value, which
/// compares greater than every finite valuation.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(std::int64_t v) : finite_(true), value_(v) {}

  bool is_infinite() const { return !finite_; }
  /// Throws std::logic_error for the infinite valuation.
  std::int64_t value() const;

  bool at_least(std::int64_t n) const { return !finite_ || value_ >= n; }

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;

  /// "inf" or the decimal value.
  std::string to_string() const;

 private:
  Valuation() : finite_(false), value_(0) {}

  bool finite_;
  std::int64_t value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of p in an integer or rational.
Valuation ord(const Integer& x, const Prime& p);
Valuation ord(const Rational& x, const Prime& p);
std::int64_t ord(std::int64_t x, const Prime& p);

/// ord_p(n!) by Legendre's formula.
std::int64_t ord_factorial(std::uint64_t n, const Prime& p);

/// a == b mod p^N for rationals, i.e. ord_p(a - b) >= N.
bool congruent_mod_pN(const Rational& a, const Rational& b, const Prime& p, std::int64_t N);

/// Integer power p^e as a rational, e may be negative.
Rational prime_power(const Prime& p, std::int64_t e);

}  // namespace mpbern

#endif  // MPBERN_CORE_HPP
