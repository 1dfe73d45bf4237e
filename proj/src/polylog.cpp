#include "mpbern/polylog.hpp"

namespace mpbern {

std::string_view to_string(ChainVariant v) { return v == ChainVariant::Strict ? "strict" : "star"; }

std::vector<Rational> chain_coefficients(const Index& k, std::int64_t max_m, ChainVariant variant) {
  if (max_m < 0) throw std::invalid_argument("chain_coefficients: max_m must be non-negative");
  const auto size = static_cast<std::size_t>(max_m) + 1;
  std::vector<Rational> level(size, Rational(0));
  for (std::size_t m = 1; m < size; ++m) level[m] = inverse_power(static_cast<std::int64_t>(m), k[0]);

  for (std::size_t s = 1; s < k.depth(); ++s) {
    std::vector<Rational> next(size, Rational(0));
    Rational prefix(0);
    for (std::size_t m = 1; m < size; ++m) {
      // Star chains may repeat the previous entry, strict ones may not.
      if (variant == ChainVariant::Star) prefix += level[m];
      if (prefix != 0) next[m] = prefix * inverse_power(static_cast<std::int64_t>(m), k[s]);
      if (variant == ChainVariant::Strict) prefix += level[m];
    }
    level = std::move(next);
  }
  return level;
}

Rational chain_coefficient(const Index& k, std::int64_t m, ChainVariant variant) {
  if (m < 1) throw std::invalid_argument("chain_coefficient: m must be positive");
  return chain_coefficients(k, m, variant)[static_cast<std::size_t>(m)];
}

TruncatedSeries multiple_polylog(const Index& k, std::size_t order, ChainVariant variant) {
  return TruncatedSeries(chain_coefficients(k, static_cast<std::int64_t>(order), variant));
}

}  // namespace mpbern
