#ifndef MPBERN_MAHLER_HPP
#define MPBERN_MAHLER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mpbern/core.hpp"

namespace mpbern {

/// Raised by prelemma_check() when m == n mod (p-1)p^{N-1} or m, n >= N fails.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (x^m - x^n) / p^N = sum_j a_j floor(j/p)! binom(x, j), j <= max(m, n).
struct MahlerExpansion {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::int64_t p = 0;
  std::vector<Rational> coeffs;
  std::vector<bool> integral;  ///< ord_p(a_j) >= 0

  bool all_integral() const;
  /// The m == n mod (p-1)p^{N-1} and m, n >= N hypotheses.
  bool hypotheses_hold() const;

  friend bool operator==(const MahlerExpansion&, const MahlerExpansion&) = default;
};

/// a_j = j! (S(m, j) - S(n, j)) / (p^N floor(j/p)!). The expansion is checked
/// against (x^m - x^n)/p^N at x = 0..max(m, n) before returning; a mismatch
/// throws std::logic_error.
MahlerExpansion mahler_expand(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p);

/// Evaluates sum_j a_j floor(j/p)! binom(x, j).
Rational evaluate(const MahlerExpansion& e, std::int64_t x);

/// True iff every coefficient is p-integral. Throws HypothesisViolation when
/// the hypotheses do not hold; mahler_expand still works for such inputs.
bool prelemma_check(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p);

/// m == n mod (p-1) p^{N-1}.
bool orders_congruent(std::int64_t m, std::int64_t n, std::int64_t N, const Prime& p);

}  // namespace mpbern

#endif  // MPBERN_MAHLER_HPP
