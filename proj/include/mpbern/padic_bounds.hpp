#ifndef MPBERN_PADIC_BOUNDS_HPP
#define MPBERN_PADIC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mpbern/core.hpp"

namespace mpbern {

/// floor(j/p)! times the strict chain sum with top fixed at j+1.
struct HValue {
  Index k;
  std::int64_t p;
  std::int64_t j;
  Rational value;
  Valuation valuation;
};

HValue h_value(const Index& k, const Prime& p, std::int64_t j);

enum class BoundKind { KeyLemma, FMin };

/// Result of checking a lower bound on a finite range.
struct BoundReport {
  BoundKind kind = BoundKind::KeyLemma;
  Index k{0};
  std::int64_t p = 0;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  Valuation minimum = Valuation::infinity();
  std::int64_t argmin = -1;
  std::int64_t bound = 0;        ///< -2 wt(k+)
  bool hypothesis_ok = false;    ///< wt(k+) < p - 1
  bool pass = false;             ///< minimum >= bound
  /// KeyLemma only: every j >= tail_start is covered by the growth bound,
  /// and tail_covered says whether the scanned prefix reaches it.
  std::optional<std::int64_t> tail_start;
  bool tail_covered = false;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

std::string_view to_string(BoundKind kind);

/// min ord_p(h(j)) over r-1 <= j <= j_max against -2 wt(k+).
BoundReport keylemma_scan(const Index& k, const Prime& p, std::int64_t j_max, unsigned workers = 1);

/// Maximum of sum_s k_s' ord_p(b_s) over strict chains 0 < b_1 < ... < b_{r-1} <= a.
/// Zero when r = 1 or when no chain fits (a < r-1).
std::int64_t chain_valuation_max(const Index& k, const Prime& p, std::int64_t a);

/// F(a) = ord_p(a!) - k_r' ord_p(a+1) - chain_valuation_max(k, p, a) - wt(k+).
std::int64_t F_value(const Index& k, const Prime& p, std::int64_t a);

BoundReport F_min_scan(const Index& k, const Prime& p, std::int64_t a_max);

/// Smallest j0 such that for all j >= j0
///   ord_p(floor(j/p)!) - k_r'(1 + log_p(j+1)) - wt(k+)(1 + log_p j) >= -2 wt(k+),
/// logs floored. Past j0 the growth of the factorial alone certifies the bound.
std::int64_t keylemma_tail_start(const Index& k, const Prime& p);

}  // namespace mpbern

#endif  // MPBERN_PADIC_BOUNDS_HPP
