#ifndef MPBERN_POLYLOG_HPP
#define MPBERN_POLYLOG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "mpbern/core.hpp"
#include "mpbern/series.hpp"

namespace mpbern {

/// STRICT sums over 0 < m1 < ... < m_{r-1} < m, STAR over 0 < m1 <= ... <= m.
enum class ChainVariant { Strict, Star };

std::string_view to_string(ChainVariant v);

/// Sum over chains with top fixed at m of 1 / (m1^k1 ... m_{r-1}^k_{r-1} m^kr).
/// Depth one has the single term 1/m^k1. Empty chain sets give zero.
Rational chain_coefficient(const Index& k, std::int64_t m, ChainVariant variant);

/// chain_coefficient(k, m) for m = 0..max_m in one pass (entry 0 is zero).
///
/// Level s holds A_s(m), the sum over depth-s chains ending at m; level s+1
/// is the running prefix sum of level s divided by m^{k_{s+1}}, so the cost
/// is O(r * max_m) rational operations.
std::vector<Rational> chain_coefficients(const Index& k, std::int64_t max_m, ChainVariant variant);

/// Li_k(t) (Strict) or Li*_k(t) (Star) truncated at t^order.
TruncatedSeries multiple_polylog(const Index& k, std::size_t order, ChainVariant variant);

}  // namespace mpbern

#endif  // MPBERN_POLYLOG_HPP
