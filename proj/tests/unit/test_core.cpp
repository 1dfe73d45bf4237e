#include <doctest.h>

#include <random>

#include "mpbern/core.hpp"

using namespace mpbern;

TEST_CASE("weight and wt_plus") {
  CHECK(weight(Index{1, 2, 3}) == 6);
  CHECK(weight(Index{-2, 5}) == 3);
  CHECK(weight(Index{0}) == 0);
  CHECK(wt_plus(Index{-2, 5}) == 5);
  CHECK(wt_plus(Index{-1, -3}) == 0);
  CHECK(wt_plus(Index{1, 1}) == 2);
  CHECK(plus_part(Index{-2, 5, 0}) == Index{0, 5, 0});
}

TEST_CASE("wt_plus dominates weight, equal iff no negative parts") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> part(-5, 5), depth(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> parts(static_cast<std::size_t>(depth(rng)));
    for (int& v : parts) v = part(rng);
    const Index k(parts);
    CHECK(wt_plus(k) >= weight(k));
    const bool nonneg = std::all_of(parts.begin(), parts.end(), [](int v) { return v >= 0; });
    CHECK((wt_plus(k) == weight(k)) == nonneg);
    CHECK(wt_plus(k) == weight(plus_part(k)));
  }
}

TEST_CASE("index parsing") {
  CHECK(Index::parse("1,-2,3") == Index{1, -2, 3});
  CHECK(Index::parse(" 1 , -2,\t3 ") == Index{1, -2, 3});
  CHECK(Index::parse("+4") == Index{4});
  CHECK(Index::parse("1,-2,3").to_string() == "1,-2,3");
  CHECK_THROWS_AS(Index::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(Index(std::vector<int>{}), std::invalid_argument);
  try {
    Index::parse("1,x");
    FAIL("expected parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("with_last_decremented only touches the last entry") {
  CHECK(Index{1, 2}.with_last_decremented() == Index{1, 1});
  CHECK(Index{3}.with_last_decremented() == Index{2});
  CHECK(Index{0}.with_last_decremented() == Index{-1});
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Prime(0), std::invalid_argument);
  CHECK(Prime(5).value() == 5);
}

TEST_CASE("ord examples") {
  CHECK(ord(make_rational(5, 2), Prime(5)) == Valuation(1));
  CHECK(ord(Rational(0), Prime(3)).is_infinite());
  CHECK(ord(Rational(12), Prime(2)) == Valuation(2));
  CHECK(ord(make_rational(7, 75), Prime(5)) == Valuation(-2));
  CHECK(ord_factorial(24, Prime(5)) == 4);
  CHECK(ord_factorial(125, Prime(5)) == 31);
}

TEST_CASE("valuation ordering and arithmetic") {
  const auto inf = Valuation::infinity();
  CHECK(inf > Valuation(1000000));
  CHECK(Valuation(-3) < Valuation(2));
  CHECK(inf == Valuation::infinity());
  CHECK((inf + Valuation(4)).is_infinite());
  CHECK(Valuation(2) + Valuation(-5) == Valuation(-3));
  CHECK(inf.at_least(1 << 30));
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("congruent_mod_pN examples") {
  CHECK(congruent_mod_pN(make_rational(1, 6), make_rational(1, 6), Prime(7), 3));
  CHECK(congruent_mod_pN(make_rational(5, 2), 0, Prime(5), 1));
  CHECK_FALSE(congruent_mod_pN(make_rational(5, 2), 0, Prime(5), 2));
  CHECK(congruent_mod_pN(0, 0, Prime(3), 100));
}

namespace {
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  long n = num(rng);
  if (n == 0) n = 1;
  return make_rational(Integer(n), Integer(den(rng)));
}
}  // namespace

TEST_CASE("ord is multiplicative and ultrametric") {
  std::mt19937 rng(2024);
  for (std::int64_t prime : {2, 3, 5, 7}) {
    const Prime p(prime);
    for (int i = 0; i < 1000; ++i) {
      const Rational x = random_rational(rng), y = random_rational(rng);
      CHECK(ord(Rational(x * y), p) == ord(x, p) + ord(y, p));
      CHECK(ord(Rational(x + y), p) >= std::min(ord(x, p), ord(y, p)));
    }
  }
}

TEST_CASE("congruence is an equivalence relation and additive") {
  std::mt19937 rng(99);
  const Prime p(5);
  const Rational modulus = prime_power(p, 2);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng), c = random_rational(rng);
    std::uniform_int_distribution<long> mult(-50, 50);
    const Rational b = a + modulus * Rational(mult(rng));
    const Rational d = c + modulus * Rational(mult(rng));
    CHECK(congruent_mod_pN(a, a, p, 2));
    CHECK(congruent_mod_pN(a, b, p, 2) == congruent_mod_pN(b, a, p, 2));
    if (ord(a, p).at_least(0)) {
      CHECK(congruent_mod_pN(a, b, p, 2));
      CHECK(congruent_mod_pN(Rational(a + c), Rational(b + d), p, 2));
    }
    const Rational e = b + modulus * Rational(mult(rng));
    if (congruent_mod_pN(a, b, p, 2) && congruent_mod_pN(b, e, p, 2)) CHECK(congruent_mod_pN(a, e, p, 2));
  }
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK(inverse_power(5, 2) == make_rational(1, 25));
  CHECK(inverse_power(3, -2) == Rational(9));
  CHECK(inverse_power(7, 0) == Rational(1));
}
