#ifndef MPBERN_CONGRUENCE_HPP
#define MPBERN_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpbern/core.hpp"
#include "mpbern/numbers.hpp"

namespace mpbern {

enum class ReportKind {
  Theorem,         ///< p^{2 wt(k+)} X_m == p^{2 wt(k+)} X_n mod p^N
  Classical,       ///< (1 - p^{m-1}) B_m / m == (1 - p^{n-1}) B_n / n mod p^N
  Counterexample,  ///< p B_1 == p B_m mod p^N, m = (p-1)p^N + 1, expected to fail
};

std::string_view to_string(ReportKind kind);

/// Every flag is recorded whether or not it holds; flags that do not apply
/// to a report kind stay true.
struct Hypotheses {
  bool orders_at_least_N = true;       ///< m, n >= N
  bool wt_plus_below_p_minus_1 = true;  ///< wt(k+) < p - 1
  bool orders_congruent = true;         ///< m == n mod (p-1)p^{N-1}; mod (p-1)p^N for Counterexample
  bool p_minus_1_not_dividing = true;   ///< Classical: (p-1) does not divide m
  bool orders_even = true;              ///< Classical: m, n even
  bool prime_bound = true;              ///< Counterexample: p >= max(k+2, (N+k)/2)

  friend bool operator==(const Hypotheses&, const Hypotheses&) = default;
};

struct CongruenceReport {
  ReportKind kind = ReportKind::Theorem;
  std::optional<Family> family;  ///< absent for Classical
  std::optional<Index> k;        ///< absent for Classical
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::int64_t scale_exponent = 0;
  Rational lhs;
  Rational rhs;
  Valuation achieved = Valuation::infinity();
  std::int64_t required = 0;
  bool pass = false;  ///< achieved >= required
  Hypotheses hypotheses;

  /// Whether the hypotheses of the statement being checked all hold.
  bool hypotheses_hold() const;
  /// True when the outcome agrees with the mathematics: hypothesis cells
  /// pass, counterexamples fail, everything else is informational.
  bool confirms() const;

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

CongruenceReport classical_kummer(const Prime& p, std::int64_t m, std::int64_t n, std::int64_t N);

CongruenceReport mpb_kummer(const Index& k, Family family, const Prime& p, std::int64_t m, std::int64_t n,
                            std::int64_t N);

/// p B_1^{(1)} = p/2 against p B_m^{(1)} = 0 for m = (p-1)p^N + 1, N >= 2.
CongruenceReport kitahara_counterexample(const Prime& p, std::int64_t N);

struct PairStrategy {
  enum class Kind {
    Arithmetic,  ///< n = m + (p-1)p^{N-1} d, d = 1..steps, m in [m_lo, m_hi]
    Explicit,    ///< the listed pairs
    All,         ///< every congruent N <= m < n <= n_max
  };
  Kind kind = Kind::Arithmetic;
  std::int64_t m_lo = 1;
  std::int64_t m_hi = 10;
  std::int64_t steps = 1;
  std::int64_t n_max = 30;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  std::vector<std::pair<std::int64_t, std::int64_t>> expand(std::int64_t p, std::int64_t N) const;
};

struct ScanSpec {
  std::vector<Family> families;
  std::vector<Index> indices;
  std::vector<std::int64_t> primes;
  std::vector<std::int64_t> Ns;
  PairStrategy pairs;
  unsigned workers = 1;
};

struct ScanCellError {
  std::string cell;
  std::string message;
};

/// Per (family, k, p, N) aggregate.
struct ScanSummaryRow {
  Family family;
  Index k;
  std::int64_t p;
  std::int64_t N;
  std::size_t cells = 0;
  std::size_t hypothesis_cells = 0;
  std::size_t failures = 0;  ///< hypothesis cells that did not pass
  /// min(achieved - required) over hypothesis cells; absent if every such
  /// difference vanished exactly (or there were none).
  std::optional<std::int64_t> min_margin;
};

struct ScanResult {
  std::vector<CongruenceReport> reports;
  std::vector<ScanCellError> errors;
  std::vector<ScanSummaryRow> summary;

  std::size_t failures() const;
};

/// Evaluates every cell of the grid. Output order is fixed by the grid
/// (family, index, prime, N, pair) and independent of the worker count;
/// a throwing cell is recorded in `errors` and the scan continues.
ScanResult scan(const ScanSpec& spec);

}  // namespace mpbern

#endif  // MPBERN_CONGRUENCE_HPP
