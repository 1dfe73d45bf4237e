#include "mpbern/mahler.hpp"

#include <algorithm>
#include <string>

#include "mpbern/stirling.hpp"

namespace mpbern {

bool orders_congruent(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::int64_t modulus = p.value() - 1;
  for (std::int64_t i = 1; i < N; ++i) modulus *= p.value();
  return (m - n) % modulus == 0;
}

bool MahlerExpansion::all_integral() const {
  return std::all_of(integral.begin(), integral.end(), [](bool b) { return b; });
}

bool MahlerExpansion::hypotheses_hold() const {
  return m >= N && n >= N && orders_congruent(m, n, N, Prime(p));
}

Rational evaluate(const MahlerExpansion& e, std::int64_t x) {
  Rational sum(0);
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
    if (e.coeffs[j] == 0) continue;
    Integer basis = factorial(j / static_cast<std::size_t>(e.p));
    // binom(x, j) for negative x is (-1)^j binom(j - x - 1, j).
    Integer b = x >= 0 ? binomial(static_cast<std::uint64_t>(x), j)
                       : binomial(j + static_cast<std::uint64_t>(-x) - 1, j);
    if (x < 0 && j % 2 == 1) b = -b;
    sum += e.coeffs[j] * (basis * b);
  }
  return sum;
}

MahlerExpansion mahler_expand(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p) {
  if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("mahler_expand: m, n, N must be positive");
  if (!p.is_odd()) throw std::invalid_argument("mahler_expand: p must be odd");
  MahlerExpansion e;
  e.m = m;
  e.n = n;
  e.N = N;
  e.p = p.value();
  const auto len = static_cast<std::size_t>(std::max(m, n)) + 1;
  const Rational scale = prime_power(p, -N);
  e.coeffs.reserve(len);
  e.integral.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    const Integer diff = stirling2(m, jj) - stirling2(n, jj);
    Rational a = scale * make_rational(factorial(j) * diff, factorial(j / static_cast<std::size_t>(e.p)));
    e.integral.push_back(ord(a, p).at_least(0));
    e.coeffs.push_back(std::move(a));
  }

  // Reconstruction at len points pins down a polynomial of degree < len.
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(len); ++x) {
    Integer xm, xn;
    const Integer xz(static_cast<long>(x));
    mpz_pow_ui(xm.get_mpz_t(), xz.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_pow_ui(xn.get_mpz_t(), xz.get_mpz_t(), static_cast<unsigned long>(n));
    if (evaluate(e, x) != scale * Rational(xm - xn)) {
      throw std::logic_error("mahler_expand: reconstruction failed at x = " + std::to_string(x));
    }
  }
  return e;
}

bool prelemma_check(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p) {
  if (m < N || n < N || !orders_congruent(m, n, N, p)) {
    throw HypothesisViolation("prelemma hypotheses fail for m=" + std::to_string(m) + " n=" +
                              std::to_string(n) + " N=" + std::to_string(N) + " p=" +
                              std::to_string(p.value()));
  }
  return mahler_expand(m, n, N, p).all_integral();
}

}  // namespace mpbern
