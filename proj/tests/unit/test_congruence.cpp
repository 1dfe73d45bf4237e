#include <doctest.h>

#include "../oracles.hpp"
#include "mpbern/congruence.hpp"
#include "mpbern/mahler.hpp"

using namespace mpbern;

TEST_CASE("classical Kummer examples") {
  const auto a = classical_kummer(Prime(5), 2, 6, 1);
  CHECK(a.lhs - a.rhs == make_rational(760, 63));
  CHECK(a.achieved == Valuation(1));
  CHECK(a.pass);
  CHECK(a.hypotheses_hold());

  CHECK(classical_kummer(Prime(7), 4, 10, 1).pass);

  const auto same = classical_kummer(Prime(5), 2, 2, 3);
  CHECK(same.achieved.is_infinite());
  CHECK(same.pass);
  CHECK_THROWS_AS(classical_kummer(Prime(2), 2, 4, 1), std::invalid_argument);
}

TEST_CASE("classical Kummer on the grid where it applies") {
  for (std::int64_t prime : {5, 7, 11}) {
    const Prime p(prime);
    for (std::int64_t N : {1, 2}) {
      for (std::int64_t m = 2; m <= 40; m += 2) {
        for (std::int64_t n = 2; n <= 40; n += 2) {
          const auto r = classical_kummer(p, m, n, N);
          if (r.hypotheses_hold()) CHECK(r.pass);
        }
      }
    }
  }
}

TEST_CASE("classical Kummer needs (p-1) not dividing m") {
  const auto r = classical_kummer(Prime(5), 4, 8, 1);
  CHECK(r.hypotheses.orders_congruent);
  CHECK_FALSE(r.hypotheses.p_minus_1_not_dividing);
  CHECK(r.achieved == Valuation(-1));
  CHECK_FALSE(r.pass);
  CHECK(r.confirms());
}

TEST_CASE("multi-poly-Bernoulli Kummer examples") {
  const auto a = mpb_kummer(Index{1}, Family::B, Prime(5), 2, 6, 1);
  CHECK(a.lhs - a.rhs == make_rational(25, 7));
  CHECK(a.achieved == Valuation(2));
  CHECK(a.pass);
  CHECK(a.scale_exponent == 2);

  const auto b = mpb_kummer(Index{2, 1}, Family::C, Prime(7), 3, 9, 1);
  CHECK(b.hypotheses_hold());
  CHECK(b.pass);

  const auto c = mpb_kummer(Index{-2}, Family::B, Prime(3), 1, 3, 1);
  CHECK(c.scale_exponent == 0);
  CHECK(c.hypotheses_hold());
  CHECK(c.pass);
}

TEST_CASE("hypotheses are recorded, not enforced") {
  const auto r = mpb_kummer(Index{3, 2}, Family::B, Prime(5), 2, 6, 1);
  CHECK_FALSE(r.hypotheses.wt_plus_below_p_minus_1);
  CHECK_FALSE(r.hypotheses_hold());
  CHECK(r.confirms());
  const auto small = mpb_kummer(Index{1}, Family::B, Prime(5), 1, 21, 2);
  CHECK_FALSE(small.hypotheses.orders_at_least_N);
}

TEST_CASE("Kitahara counterexample") {
  for (auto [prime, N, m] : {std::tuple{5, 2, 101}, std::tuple{3, 2, 19}, std::tuple{7, 3, 2059}}) {
    const auto r = kitahara_counterexample(Prime(prime), N);
    CHECK(r.n == m);
    CHECK(r.m == 1);
    CHECK(r.lhs == make_rational(prime, 2));
    CHECK(r.rhs == 0);
    CHECK(r.achieved == Valuation(1));
    CHECK_FALSE(r.pass);
    CHECK(r.hypotheses_hold());
    CHECK(r.confirms());
  }
  for (std::int64_t prime : {3, 5, 7}) {
    for (std::int64_t N : {2, 3}) CHECK_FALSE(kitahara_counterexample(Prime(prime), N).pass);
  }
  CHECK_THROWS_AS(kitahara_counterexample(Prime(5), 1), std::invalid_argument);
}

TEST_CASE("scan examples") {
  ScanSpec spec;
  spec.families = {Family::B};
  spec.indices = {Index{1}};
  spec.primes = {5};
  spec.Ns = {1};
  spec.pairs.kind = PairStrategy::Kind::Arithmetic;
  spec.pairs.m_lo = 1;
  spec.pairs.m_hi = 10;
  spec.pairs.steps = 1;
  const auto result = scan(spec);
  REQUIRE(result.reports.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(result.reports[i].m == static_cast<std::int64_t>(i) + 1);
    CHECK(result.reports[i].n == static_cast<std::int64_t>(i) + 5);
    CHECK(result.reports[i].pass);
  }
  CHECK(result.failures() == 0);
  REQUIRE(result.summary.size() == 1);
  CHECK(result.summary[0].cells == 10);

  spec.indices.clear();
  CHECK(scan(spec).reports.empty());
}

TEST_CASE("scan flags hypothesis-violating cells and collects cell errors") {
  ScanSpec spec;
  spec.families = {Family::B, Family::CStar};
  spec.indices = {Index{4}, Index{1}};
  spec.primes = {5, 9};
  spec.Ns = {1};
  spec.pairs.kind = PairStrategy::Kind::Explicit;
  spec.pairs.pairs = {{2, 6}, {3, 7}};
  const auto result = scan(spec);
  CHECK(result.reports.size() == 8);
  CHECK(result.errors.size() == 8);  // p = 9 cells
  for (const auto& r : result.reports) {
    if (r.k == Index{4}) CHECK_FALSE(r.hypotheses.wt_plus_below_p_minus_1);
  }
  CHECK(result.errors[0].message.find("not a prime") != std::string::npos);
}

TEST_CASE("scan output does not depend on the worker count") {
  ScanSpec spec;
  spec.families = {Family::B, Family::C, Family::BStar, Family::CStar};
  spec.indices = oracle::index_grid(2, -1, 2);
  spec.primes = {5, 7};
  spec.Ns = {1};
  spec.pairs.kind = PairStrategy::Kind::All;
  spec.pairs.n_max = 16;
  spec.workers = 1;
  const auto serial = scan(spec);
  spec.workers = 4;
  const auto parallel = scan(spec);
  CHECK(serial.reports == parallel.reports);
  CHECK(serial.failures() == 0);
}

TEST_CASE("pair strategies") {
  PairStrategy all;
  all.kind = PairStrategy::Kind::All;
  all.n_max = 12;
  const auto pairs = all.expand(5, 1);
  for (auto [m, n] : pairs) {
    CHECK(m >= 1);
    CHECK(m < n);
    CHECK(n <= 12);
    CHECK((n - m) % 4 == 0);
  }
  CHECK(pairs.size() == 12);
  PairStrategy arith;
  arith.m_lo = 2;
  arith.m_hi = 2;
  arith.steps = 3;
  CHECK(arith.expand(7, 2) == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 44}, {2, 86}, {2, 128}});
}
