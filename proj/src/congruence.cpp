#include "mpbern/congruence.hpp"

#include <algorithm>
#include <map>

#include "mpbern/mahler.hpp"
#include "mpbern/parallel.hpp"

namespace mpbern {

std::string_view to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::Theorem: return "theorem";
    case ReportKind::Classical: return "classical";
    case ReportKind::Counterexample: return "counterexample";
  }
  return "?";
}

bool CongruenceReport::hypotheses_hold() const {
  const auto& h = hypotheses;
  switch (kind) {
    case ReportKind::Theorem: return h.orders_at_least_N && h.wt_plus_below_p_minus_1 && h.orders_congruent;
    case ReportKind::Classical: return h.orders_congruent && h.p_minus_1_not_dividing;
    case ReportKind::Counterexample: return h.orders_congruent && h.prime_bound;
  }
  return false;
}

bool CongruenceReport::confirms() const {
  if (kind == ReportKind::Counterexample) return !pass;
  return !hypotheses_hold() || pass;
}

namespace {

void require_odd(const Prime& p) {
  if (!p.is_odd()) throw std::invalid_argument("congruence checks need an odd prime");
}

void finish(CongruenceReport& r, const Prime& p) {
  r.achieved = ord(Rational(r.lhs - r.rhs), p);
  r.required = r.N;
  r.pass = r.achieved.at_least(r.required);
}

Rational euler_corrected(const Prime& p, std::int64_t m) {
  const Rational factor = Rational(1) - prime_power(p, m - 1);
  return factor * bernoulli(m) / static_cast<unsigned long>(m);
}

}  // namespace

CongruenceReport classical_kummer(const Prime& p, std::int64_t m, std::int64_t n, std::int64_t N) {
  require_odd(p);
  if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("classical_kummer: m, n, N must be positive");
  CongruenceReport r;
  r.kind = ReportKind::Classical;
  r.p = p.value();
  r.m = m;
  r.n = n;
  r.N = N;
  r.hypotheses.orders_at_least_N = m >= N && n >= N;
  r.hypotheses.orders_congruent = orders_congruent(m, n, N, p);
  r.hypotheses.p_minus_1_not_dividing = m % (p.value() - 1) != 0;
  r.hypotheses.orders_even = m % 2 == 0 && n % 2 == 0;
  r.lhs = euler_corrected(p, m);
  r.rhs = euler_corrected(p, n);
  finish(r, p);
  return r;
}

CongruenceReport mpb_kummer(const Index& k, Family family, const Prime& p, std::int64_t m, std::int64_t n,
                            std::int64_t N) {
  require_odd(p);
  if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("mpb_kummer: m, n, N must be positive");
  CongruenceReport r;
  r.kind = ReportKind::Theorem;
  r.family = family;
  r.k = k;
  r.p = p.value();
  r.m = m;
  r.n = n;
  r.N = N;
  r.scale_exponent = 2 * wt_plus(k);
  r.hypotheses.orders_at_least_N = m >= N && n >= N;
  r.hypotheses.wt_plus_below_p_minus_1 = wt_plus(k) < p.value() - 1;
  r.hypotheses.orders_congruent = orders_congruent(m, n, N, p);
  const Rational scale = prime_power(p, r.scale_exponent);
  const auto values = mpb_explicit_range(k, std::max(m, n), family);
  r.lhs = scale * values[static_cast<std::size_t>(m)];
  r.rhs = scale * values[static_cast<std::size_t>(n)];
  finish(r, p);
  return r;
}

CongruenceReport kitahara_counterexample(const Prime& p, std::int64_t N) {
  require_odd(p);
  if (N < 2) throw std::invalid_argument("kitahara_counterexample: N must be at least 2");
  constexpr int kDepthOneWeight = 1;
  CongruenceReport r;
  r.kind = ReportKind::Counterexample;
  r.family = Family::B;
  r.k = Index{kDepthOneWeight};
  r.p = p.value();
  r.N = N;
  std::int64_t modulus = p.value() - 1;
  for (std::int64_t i = 0; i < N; ++i) modulus *= p.value();
  r.m = 1;
  r.n = modulus + 1;
  r.scale_exponent = kDepthOneWeight;
  r.hypotheses.orders_congruent = (r.n - r.m) % modulus == 0;
  r.hypotheses.prime_bound = 2 * p.value() >= 2 * (kDepthOneWeight + 2) && 2 * p.value() >= N + kDepthOneWeight;
  const Rational scale = prime_power(p, r.scale_exponent);
  r.lhs = scale * mpb_explicit(*r.k, 1, Family::B);
  // B_n^{(1)} is the classical B_n, which vanishes for odd n >= 3.
  r.rhs = scale * bernoulli(r.n);
  finish(r, p);
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> PairStrategy::expand(std::int64_t p, std::int64_t N) const {
  std::int64_t modulus = p - 1;
  for (std::int64_t i = 1; i < N; ++i) modulus *= p;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  switch (kind) {
    case Kind::Arithmetic:
      for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        for (std::int64_t d = 1; d <= steps; ++d) out.emplace_back(m, m + modulus * d);
      }
      break;
    case Kind::Explicit:
      out = pairs;
      break;
    case Kind::All:
      for (std::int64_t m = N; m <= n_max; ++m) {
        for (std::int64_t n = m + modulus; n <= n_max; n += modulus) out.emplace_back(m, n);
      }
      break;
  }
  return out;
}

std::size_t ScanResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const CongruenceReport& r) { return !r.confirms(); }));
}

namespace {

struct Cell {
  Family family;
  const Index* k;
  std::int64_t p;
  std::int64_t N;
  std::int64_t m;
  std::int64_t n;
};

std::string cell_key(const Cell& c) {
  return std::string(to_string(c.family)) + " k=(" + c.k->to_string() + ") p=" + std::to_string(c.p) +
         " N=" + std::to_string(c.N) + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n);
}

}  // namespace

ScanResult scan(const ScanSpec& spec) {
  std::vector<Cell> cells;
  std::map<std::pair<Family, Index>, std::int64_t> warm;  // largest order needed per series
  for (Family f : spec.families) {
    for (const Index& k : spec.indices) {
      for (std::int64_t p : spec.primes) {
        for (std::int64_t N : spec.Ns) {
          for (auto [m, n] : spec.pairs.expand(p, N)) {
            cells.push_back(Cell{f, &k, p, N, m, n});
            auto& top = warm[{f, k}];
            top = std::max({top, m, n});
          }
        }
      }
    }
  }

  // Fill the value memo once per (family, index) so cells only read it.
  std::vector<std::pair<std::pair<Family, Index>, std::int64_t>> warm_list(warm.begin(), warm.end());
  parallel_for(warm_list.size(), spec.workers, [&](std::size_t i) {
    const auto& [key, top] = warm_list[i];
    if (top >= 0) mpb_explicit_range(key.second, top, key.first);
  });

  std::vector<std::optional<CongruenceReport>> slots(cells.size());
  std::vector<std::optional<std::string>> failures(cells.size());
  parallel_for(cells.size(), spec.workers, [&](std::size_t i) {
    const Cell& c = cells[i];
    try {
      slots[i] = mpb_kummer(*c.k, c.family, Prime(c.p), c.m, c.n, c.N);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });

  ScanResult result;
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>, ScanSummaryRow> rows;
  auto family_pos = [&](Family f) {
    return static_cast<std::size_t>(std::find(spec.families.begin(), spec.families.end(), f) - spec.families.begin());
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    const auto index_pos = static_cast<std::size_t>(c.k - spec.indices.data());
    const auto key = std::make_tuple(family_pos(c.family), index_pos, c.p, c.N);
    auto [it, inserted] = rows.try_emplace(key, ScanSummaryRow{c.family, *c.k, c.p, c.N, 0, 0, 0, std::nullopt});
    auto& row = it->second;
    ++row.cells;
    if (failures[i]) {
      result.errors.push_back({cell_key(c), *failures[i]});
      continue;
    }
    const auto& r = *slots[i];
    if (r.hypotheses_hold()) {
      ++row.hypothesis_cells;
      if (!r.pass) ++row.failures;
      if (!r.achieved.is_infinite()) {
        const auto margin = r.achieved.value() - r.required;
        row.min_margin = row.min_margin ? std::min(*row.min_margin, margin) : margin;
      }
    }
    result.reports.push_back(std::move(*slots[i]));
  }
  for (auto& [key, row] : rows) result.summary.push_back(std::move(row));
  return result;
}

}  // namespace mpbern
