#include <doctest.h>

#include "../oracles.hpp"
#include "mpbern/polylog.hpp"

using namespace mpbern;

TEST_CASE("depth-one polylog is -log(1-t) for k = 1") {
  const auto li = multiple_polylog(Index{1}, 12, ChainVariant::Strict);
  CHECK(li[0] == 0);
  for (std::size_t m = 1; m <= 12; ++m) CHECK(li[m] == make_rational(1, static_cast<unsigned long>(m)));
}

TEST_CASE("chain coefficient examples") {
  CHECK(multiple_polylog(Index{1, 1}, 3, ChainVariant::Strict)[3] == make_rational(1, 2));
  CHECK(multiple_polylog(Index{1, 1}, 3, ChainVariant::Star)[2] == make_rational(3, 4));
  CHECK(chain_coefficient(Index{2}, 5, ChainVariant::Strict) == make_rational(1, 25));
  CHECK(chain_coefficient(Index{1, 1}, 1, ChainVariant::Strict) == 0);
  CHECK(chain_coefficient(Index{-1, 1}, 3, ChainVariant::Strict) == 1);
  CHECK(chain_coefficient(Index{1, 2, 3}, 2, ChainVariant::Strict) == 0);
  CHECK_THROWS_AS(chain_coefficient(Index{1}, 0, ChainVariant::Strict), std::invalid_argument);
}

TEST_CASE("prefix sums agree with brute-force chain enumeration") {
  for (const auto& k : oracle::index_grid(3, -3, 3)) {
    const std::vector<int> parts(k.parts().begin(), k.parts().end());
    for (auto variant : {ChainVariant::Strict, ChainVariant::Star}) {
      const auto fast = chain_coefficients(k, 12, variant);
      for (std::int64_t m = 1; m <= 12; ++m) {
        CHECK(fast[static_cast<std::size_t>(m)] == oracle::chain_brute(parts, m, variant == ChainVariant::Star));
      }
    }
  }
}

TEST_CASE("star coefficients dominate strict ones for positive indices") {
  for (const auto& k : oracle::index_grid(3, 1, 3)) {
    const auto strict = chain_coefficients(k, 12, ChainVariant::Strict);
    const auto star = chain_coefficients(k, 12, ChainVariant::Star);
    for (std::size_t m = 1; m <= 12; ++m) CHECK(star[m] >= strict[m]);
  }
}

TEST_CASE("series coefficients equal chain_coefficient") {
  const Index k{2, -1, 1};
  for (auto variant : {ChainVariant::Strict, ChainVariant::Star}) {
    const auto li = multiple_polylog(k, 10, variant);
    CHECK(li.order() == 10);
    for (std::int64_t m = 1; m <= 10; ++m) CHECK(li[static_cast<std::size_t>(m)] == chain_coefficient(k, m, variant));
  }
}
