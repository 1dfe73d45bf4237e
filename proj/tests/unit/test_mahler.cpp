#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "mpbern/mahler.hpp"
#include "mpbern/numbers.hpp"
#include "mpbern/polylog.hpp"

using namespace mpbern;

TEST_CASE("mahler examples") {
  const auto zero = mahler_expand(5, 5, 2, Prime(7));
  for (const auto& c : zero.coeffs) CHECK(c == 0);

  const auto e = mahler_expand(3, 1, 1, Prime(3));
  CHECK(e.coeffs == std::vector<Rational>{0, 0, 2, 2});
  CHECK(e.all_integral());
  CHECK(e.hypotheses_hold());

  const auto bad = mahler_expand(2, 1, 1, Prime(3));
  CHECK(bad.coeffs[2] == make_rational(2, 3));
  CHECK_FALSE(bad.integral[2]);
  CHECK_FALSE(bad.hypotheses_hold());
}

TEST_CASE("coefficients match iterated finite differences") {
  for (auto [m, n, N, prime] : {std::tuple{7, 3, 1, 5}, std::tuple{9, 1, 2, 3}, std::tuple{12, 4, 1, 7}}) {
    const Prime p(prime);
    const auto e = mahler_expand(m, n, N, p);
    const Rational scale = prime_power(p, -N);
    auto f = [&](std::int64_t x) -> Rational { return scale * (oracle::pow_rational(x, m) - oracle::pow_rational(x, n)); };
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
      const Rational amice = Rational(factorial(j / static_cast<std::size_t>(prime)));
      CHECK(e.coeffs[j] * amice == oracle::forward_difference(f, static_cast<int>(j)));
    }
  }
}

TEST_CASE("reconstruction on random tuples") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> mn(1, 40), big_n(1, 3), prime_pick(0, 3);
  const std::int64_t primes[] = {3, 5, 7, 11};
  for (int trial = 0; trial < 200; ++trial) {
    const int m = mn(rng), n = mn(rng), N = big_n(rng);
    const Prime p(primes[prime_pick(rng)]);
    const auto e = mahler_expand(m, n, N, p);
    CHECK(e.coeffs.size() == static_cast<std::size_t>(std::max(m, n)) + 1);
    for (std::int64_t x : {-3, 0, 2, 41, 57}) {
      CHECK(evaluate(e, x) == prime_power(p, -N) * (oracle::pow_rational(x, m) - oracle::pow_rational(x, n)));
    }
  }
}

TEST_CASE("prelemma examples and hypothesis handling") {
  CHECK(prelemma_check(3, 1, 1, Prime(3)));
  CHECK(prelemma_check(21, 1, 1, Prime(5)));
  CHECK(prelemma_check(5, 5, 3, Prime(7)));
  CHECK(prelemma_check(41, 21, 2, Prime(5)));
  CHECK_THROWS_AS(prelemma_check(21, 1, 2, Prime(5)), HypothesisViolation);
  CHECK_THROWS_AS(prelemma_check(2, 1, 1, Prime(3)), HypothesisViolation);
  CHECK_THROWS_AS(mahler_expand(2, 1, 1, Prime(2)), std::invalid_argument);
}

TEST_CASE("prelemma grid for small orders") {
  for (std::int64_t prime : {3, 5, 7}) {
    const Prime p(prime);
    for (std::int64_t N : {1, 2}) {
      for (std::int64_t m = N; m <= 30; ++m) {
        for (std::int64_t n = N; n <= 30; ++n) {
          if (orders_congruent(m, n, N, p)) CHECK(prelemma_check(m, n, N, p));
        }
      }
    }
  }
}

TEST_CASE("integrating (x^m - x^n)/p^N against the Li_k distribution") {
  for (const Index& k : {Index{1}, Index{2, 1}, Index{-1, 2}}) {
    for (auto [m, n, N, prime] : {std::tuple{6, 2, 1, 5}, std::tuple{9, 3, 1, 7}, std::tuple{22, 2, 2, 5}}) {
      const Prime p(prime);
      const auto e = mahler_expand(m, n, N, p);
      const auto chains = chain_coefficients(k, static_cast<std::int64_t>(e.coeffs.size()), ChainVariant::Strict);
      Rational integral = 0;
      for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
        Rational term = e.coeffs[j] * Rational(factorial(j / static_cast<std::size_t>(prime))) * chains[j + 1];
        if (j % 2) term = -term;
        integral += term;
      }
      const auto signed_b = [&](std::int64_t i) {
        const Rational b = mpb_explicit(k, i, Family::B);
        return i % 2 ? Rational(-b) : b;
      };
      CHECK(integral == prime_power(p, -N) * (signed_b(m) - signed_b(n)));
    }
  }
}
