#include "mpbern/padic_bounds.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "mpbern/parallel.hpp"
#include "mpbern/polylog.hpp"

namespace mpbern {

namespace {

std::int64_t clamp0(int v) { return v > 0 ? v : 0; }

// floor(log_p x) for x >= 1.
std::int64_t floor_log(std::int64_t x, std::int64_t p) {
  std::int64_t e = 0;
  while (x >= p) {
    x /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::string_view to_string(BoundKind kind) { return kind == BoundKind::KeyLemma ? "keylemma" : "fmin"; }

HValue h_value(const Index& k, const Prime& p, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("h_value: j must be non-negative");
  const Rational chain = chain_coefficient(k, j + 1, ChainVariant::Strict);
  Rational value = chain * factorial(static_cast<std::uint64_t>(j / p.value()));
  Valuation v = ord(value, p);
  return HValue{k, p.value(), j, std::move(value), v};
}

BoundReport keylemma_scan(const Index& k, const Prime& p, std::int64_t j_max, unsigned workers) {
  BoundReport report;
  report.kind = BoundKind::KeyLemma;
  report.k = k;
  report.p = p.value();
  report.range_lo = static_cast<std::int64_t>(k.depth()) - 1;
  report.range_hi = j_max;
  report.bound = -2 * wt_plus(k);
  report.hypothesis_ok = wt_plus(k) < p.value() - 1;

  if (j_max >= report.range_lo) {
    const auto chains = chain_coefficients(k, j_max + 1, ChainVariant::Strict);
    const auto count = static_cast<std::size_t>(j_max - report.range_lo + 1);
    std::vector<Valuation> vals(count, Valuation::infinity());
    // ord(h(j)) = ord(floor(j/p)!) + ord(chain); the factorial never needs building.
    parallel_for(count, workers, [&](std::size_t i) {
      const std::int64_t j = report.range_lo + static_cast<std::int64_t>(i);
      vals[i] = Valuation(ord_factorial(static_cast<std::uint64_t>(j / p.value()), p)) +
                ord(chains[static_cast<std::size_t>(j + 1)], p);
    });
    for (std::size_t i = 0; i < count; ++i) {
      if (vals[i] < report.minimum) {
        report.minimum = vals[i];
        report.argmin = report.range_lo + static_cast<std::int64_t>(i);
      }
    }
  }
  report.pass = report.minimum.at_least(report.bound);
  report.tail_start = keylemma_tail_start(k, p);
  report.tail_covered = *report.tail_start <= j_max + 1;
  return report;
}

std::int64_t chain_valuation_max(const Index& k, const Prime& p, std::int64_t a) {
  const std::size_t len = k.depth() - 1;
  if (len == 0) return 0;
  constexpr auto kNone = std::numeric_limits<std::int64_t>::min();
  // best[s]: largest weighted sum over chains filling the first s positions
  // with values seen so far.
  std::vector<std::int64_t> best(len + 1, kNone);
  best[0] = 0;
  for (std::int64_t b = 1; b <= a; ++b) {
    const std::int64_t v = ord(b, p);
    const std::size_t top = std::min<std::size_t>(len, static_cast<std::size_t>(b));
    for (std::size_t s = top; s >= 1; --s) {
      if (best[s - 1] == kNone) continue;
      best[s] = std::max(best[s], best[s - 1] + clamp0(k[s - 1]) * v);
    }
  }
  return best[len] == kNone ? 0 : best[len];
}

std::int64_t F_value(const Index& k, const Prime& p, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("F_value: a must be positive");
  return ord_factorial(static_cast<std::uint64_t>(a), p) - clamp0(k.last()) * ord(a + 1, p) -
         chain_valuation_max(k, p, a) - wt_plus(k);
}

BoundReport F_min_scan(const Index& k, const Prime& p, std::int64_t a_max) {
  BoundReport report;
  report.kind = BoundKind::FMin;
  report.k = k;
  report.p = p.value();
  report.range_lo = 1;
  report.range_hi = a_max;
  report.bound = -2 * wt_plus(k);
  report.hypothesis_ok = wt_plus(k) < p.value() - 1;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    const Valuation f(F_value(k, p, a));
    if (f < report.minimum) {
      report.minimum = f;
      report.argmin = a;
    }
  }
  report.pass = report.minimum.at_least(report.bound);
  return report;
}

std::int64_t keylemma_tail_start(const Index& k, const Prime& p) {
  const std::int64_t q = p.value();
  const std::int64_t kr = clamp0(k.last());
  const std::int64_t wt = wt_plus(k);
  const std::int64_t c = kr + wt;
  const std::int64_t target = -2 * wt;

  // On j in [q^e - 1, q^{e+1} - 1) the floored logs are at most e and
  // floor(j/q) >= q^{e-1} - 1, so the bound there is at least
  //   G(e) = ord((q^{e-1} - 1)!) - c (1 + e),
  // and G(e+1) - G(e) = q^{e-1} - 1 - c, so G only grows once q^{e-1} > c.
  std::int64_t e = 1;
  std::int64_t pe1 = 1;  // q^{e-1}
  while (true) {
    const bool growing = pe1 - 1 >= c;
    const std::int64_t g = ord_factorial(static_cast<std::uint64_t>(pe1 - 1), p) - c * (1 + e);
    if (growing && g >= target) break;
    if (pe1 > std::numeric_limits<std::int64_t>::max() / (q * q)) {
      throw std::overflow_error("keylemma_tail_start: certificate out of machine range");
    }
    pe1 *= q;
    ++e;
  }
  const std::int64_t block_start = pe1 * q - 1;

  auto bound_at = [&](std::int64_t j) {
    return ord_factorial(static_cast<std::uint64_t>(j / q), p) - kr * (1 + floor_log(j + 1, q)) -
           wt * (1 + floor_log(j, q));
  };
  std::int64_t start = 1;
  for (std::int64_t j = 1; j < block_start; ++j) {
    if (bound_at(j) < target) start = j + 1;
  }
  return start;
}

}  // namespace mpbern
