#ifndef MPBERN_SERIES_HPP
#define MPBERN_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mpbern/core.hpp"

namespace mpbern {

/// Raised by divide() when the divisor vanishes to a higher order than the
/// dividend (or is identically zero at the available precision).
class DegenerateDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by compose() when the inner series has a nonzero constant term.
class NonzeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formal power series over Q known up to t^order.
///
/// Binary operations on operands of different orders silently truncate to
/// the smaller order; nothing is ever extrapolated.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients of t^0..t^order; the vector must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const;

  TruncatedSeries truncated(std::size_t order) const;
  /// Formal derivative; the result has order()-1 (order 0 stays order 0).
  TruncatedSeries derivative() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& s);

/// q with q * b = a. A common factor t^v (v = valuation of b) is cancelled
/// first, so the quotient has order min(order a, order b) - v.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(t)) by Horner's rule; inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

TruncatedSeries exp_minus_one(std::size_t order);      // e^t - 1
TruncatedSeries one_minus_exp_neg(std::size_t order);  // 1 - e^{-t}
TruncatedSeries log_one_plus(std::size_t order);       // log(1 + t)
TruncatedSeries exp_series(std::size_t order);         // e^t

}  // namespace mpbern

#endif  // MPBERN_SERIES_HPP
