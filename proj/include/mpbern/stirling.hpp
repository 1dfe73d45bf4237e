#ifndef MPBERN_STIRLING_HPP
#define MPBERN_STIRLING_HPP

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "mpbern/core.hpp"

namespace mpbern {

/// Stirling numbers of the second kind S(a, b), 0 <= b <= a, from the
/// recurrence S(a+1, b) = S(a, b-1) + b S(a, b) with S(0, 0) = 1.
///
/// Rows are appended on demand (capacity doubles) under a writer lock;
/// lookups of existing rows only take the shared lock.
class StirlingTable {
 public:
  StirlingTable() : rows_{{Integer(1)}} {}

  /// S(a, b); zero whenever b < 0 or b > a.
  Integer get(std::int64_t a, std::int64_t b);

  /// Number of rows currently materialised.
  std::size_t rows() const;

 private:
  void grow_to(std::size_t a);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

/// Process-wide table shared by the formulas.
StirlingTable& stirling_table();

/// S(a, b) from the shared table; a must be non-negative.
Integer stirling2(std::int64_t a, std::int64_t b);

/// Coefficients c_j = S(n, j) j! with x^n = sum_j c_j binom(x, j).
std::vector<Rational> falling_basis_expand(std::int64_t n);

}  // namespace mpbern

#endif  // MPBERN_STIRLING_HPP
