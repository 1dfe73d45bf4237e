#include "mpbern/series.hpp"

#include <algorithm>

namespace mpbern {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  const auto n = std::min(order, this->order()) + 1;
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(order() - 1);
  for (std::size_t i = 1; i <= order(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return d;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries c(order);
  Rational term;
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] == 0) continue;
      term = a[i] * b[j];
      c[i + j] += term;
    }
  }
  return c;
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const std::size_t v = b.truncated(order).valuation();
  if (v > order) throw DegenerateDivision("divisor vanishes to the available precision");
  if (a.truncated(order).valuation() < v) {
    throw DegenerateDivision("divisor has higher valuation than dividend");
  }
  const std::size_t m = order - v;
  TruncatedSeries q(m);
  const Rational lead = b[v];
  Rational acc;
  for (std::size_t i = 0; i <= m; ++i) {
    acc = a[i + v];
    for (std::size_t j = 1; j <= i; ++j) {
      if (b[j + v] != 0) acc -= b[j + v] * q[i - j];
    }
    q[i] = acc / lead;
  }
  return q;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != 0) throw NonzeroConstantTerm("compose: inner series must have zero constant term");
  const std::size_t order = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(order);
  TruncatedSeries result(order);
  for (std::size_t i = order + 1; i-- > 0;) {
    result = result * in;
    result[0] += outer[i];
  }
  return result;
}

TruncatedSeries exp_series(std::size_t order) {
  TruncatedSeries s(order);
  Integer fact(1);
  for (std::size_t m = 0; m <= order; ++m) {
    if (m) fact *= static_cast<unsigned long>(m);
    s[m] = make_rational(Integer(1), fact);
  }
  return s;
}

TruncatedSeries exp_minus_one(std::size_t order) {
  auto s = exp_series(order);
  s[0] = 0;
  return s;
}

TruncatedSeries one_minus_exp_neg(std::size_t order) {
  auto s = exp_series(order);
  s[0] = 0;
  for (std::size_t m = 2; m <= order; m += 2) s[m] = -s[m];
  return s;
}

TruncatedSeries log_one_plus(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t m = 1; m <= order; ++m) {
    s[m] = make_rational(Integer(sign_power(static_cast<std::int64_t>(m) - 1)), Integer(static_cast<unsigned long>(m)));
  }
  return s;
}

}  // namespace mpbern
