#include "mpbern/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "mpbern/series.hpp"
#include "mpbern/stirling.hpp"

namespace mpbern {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::BStar: return "Bstar";
    case Family::CStar: return "Cstar";
  }
  return "?";
}

std::string_view to_string(Method m) { return m == Method::Explicit ? "explicit" : "series"; }

std::optional<Family> parse_family(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "b") return Family::B;
  if (t == "c") return Family::C;
  if (t == "bstar" || t == "b*") return Family::BStar;
  if (t == "cstar" || t == "c*") return Family::CStar;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "explicit") return Method::Explicit;
  if (text == "series") return Method::Series;
  return std::nullopt;
}

ChainVariant variant_of(Family f) {
  return (f == Family::BStar || f == Family::CStar) ? ChainVariant::Star : ChainVariant::Strict;
}

bool is_c_family(Family f) { return f == Family::C || f == Family::CStar; }

Family family_of(bool c_family, ChainVariant v) {
  if (v == ChainVariant::Strict) return c_family ? Family::C : Family::B;
  return c_family ? Family::CStar : Family::BStar;
}

namespace {

// Writers may race to fill the same key; they compute identical values, so
// the longer vector simply wins.
class ValueCache {
 public:
  std::optional<Rational> find(Family f, const Index& k, std::int64_t n) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find({f, k});
    if (it == map_.end() || static_cast<std::size_t>(n) >= it->second.size()) return std::nullopt;
    return it->second[static_cast<std::size_t>(n)];
  }

  std::optional<std::vector<Rational>> prefix(Family f, const Index& k, std::int64_t n_max) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find({f, k});
    if (it == map_.end() || static_cast<std::size_t>(n_max) >= it->second.size()) return std::nullopt;
    return std::vector<Rational>(it->second.begin(), it->second.begin() + n_max + 1);
  }

  void store(Family f, const Index& k, std::vector<Rational> values) {
    std::unique_lock lock(mutex_);
    auto& slot = map_[{f, k}];
    if (values.size() > slot.size()) slot = std::move(values);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Family, Index>, std::vector<Rational>> map_;
};

ValueCache& explicit_cache() {
  static ValueCache cache;
  return cache;
}

std::vector<Rational> compute_explicit(const Index& k, std::int64_t n_max, Family family) {
  const auto chains = chain_coefficients(k, n_max + 1, variant_of(family));
  const bool c_family = is_c_family(family);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    Rational sum(0);
    Integer fact(1);  // (m-1)!
    for (std::int64_t m = 1; m <= n + 1; ++m) {
      if (m > 1) fact *= static_cast<unsigned long>(m - 1);
      const auto& chain = chains[static_cast<std::size_t>(m)];
      if (chain == 0) continue;
      const Integer s = c_family ? stirling2(n + 1, m) : stirling2(n, m - 1);
      Integer weight = fact * s;
      if (sign_power(m - 1) < 0) weight = -weight;
      sum += chain * weight;
    }
    if (sign_power(n) < 0) sum = -sum;
    out.push_back(std::move(sum));
  }
  return out;
}

void check_n(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
}

}  // namespace

std::vector<Rational> mpb_explicit_range(const Index& k, std::int64_t n_max, Family family) {
  check_n(n_max);
  if (auto hit = explicit_cache().prefix(family, k, n_max)) return std::move(*hit);
  auto values = compute_explicit(k, n_max, family);
  explicit_cache().store(family, k, values);
  return values;
}

Rational mpb_explicit(const Index& k, std::int64_t n, Family family) {
  check_n(n);
  if (auto hit = explicit_cache().find(family, k, n)) return *hit;
  return mpb_explicit_range(k, n, family)[static_cast<std::size_t>(n)];
}

std::vector<Rational> mpb_series_range(const Index& k, std::int64_t n_max, Family family) {
  check_n(n_max);
  // Dividing by a series of valuation one costs one order of precision.
  const auto order = static_cast<std::size_t>(n_max) + 1;
  const auto x = one_minus_exp_neg(order);
  const auto li = compose(multiple_polylog(k, order, variant_of(family)), x);
  const auto gf = divide(li, is_c_family(family) ? exp_minus_one(order) : x);
  std::vector<Rational> out;
  out.reserve(order);
  Integer fact(1);
  for (std::size_t n = 0; n < order; ++n) {
    if (n) fact *= static_cast<unsigned long>(n);
    out.push_back(gf[n] * fact);
  }
  return out;
}

Rational mpb_series(const Index& k, std::int64_t n, Family family) {
  return mpb_series_range(k, n, family)[static_cast<std::size_t>(n)];
}

Rational mpb_value(const Index& k, std::int64_t n, Family family, Method method) {
  return method == Method::Explicit ? mpb_explicit(k, n, family) : mpb_series(k, n, family);
}

bool relation_B_from_C(const Index& k, std::int64_t n, ChainVariant v) {
  check_n(n);
  const auto c = mpb_explicit_range(k, n, family_of(true, v));
  Rational sum(0);
  for (std::int64_t i = 0; i <= n; ++i) {
    sum += c[static_cast<std::size_t>(i)] * binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
  }
  return sum == mpb_explicit(k, n, family_of(false, v));
}

bool relation_C_from_B(const Index& k, std::int64_t n, ChainVariant v) {
  check_n(n);
  const auto b = mpb_explicit_range(k, n, family_of(false, v));
  Rational sum(0);
  for (std::int64_t i = 0; i <= n; ++i) {
    Integer w = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
    if (sign_power(n - i) < 0) w = -w;
    sum += b[static_cast<std::size_t>(i)] * w;
  }
  return sum == mpb_explicit(k, n, family_of(true, v));
}

bool relation_shift(const Index& k, std::int64_t n, ChainVariant v) {
  if (n < 1) throw std::invalid_argument("relation_shift requires n >= 1");
  const Rational lhs = mpb_explicit(k, n, family_of(false, v));
  const Rational rhs = mpb_explicit(k, n, family_of(true, v)) +
                       mpb_explicit(k.with_last_decremented(), n - 1, family_of(true, v));
  return lhs == rhs;
}

Rational distribution_moment(const Index& k, std::int64_t n, ChainVariant v) {
  check_n(n);
  const auto chains = chain_coefficients(k, n + 1, v);
  Rational sum(0);
  for (std::int64_t j = 0; j <= n; ++j) {
    const auto& chain = chains[static_cast<std::size_t>(j + 1)];
    if (chain == 0) continue;
    Integer w = stirling2(n, j) * factorial(static_cast<std::uint64_t>(j));
    if (sign_power(j) < 0) w = -w;
    sum += chain * w;
  }
  return sum;
}

namespace {

struct BernoulliMemo {
  std::shared_mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliMemo& bernoulli_memo() {
  static BernoulliMemo memo;
  return memo;
}

}  // namespace

Rational bernoulli(std::int64_t n) {
  check_n(n);
  if (n >= 3 && n % 2 == 1) return Rational(0);
  auto& memo = bernoulli_memo();
  {
    std::shared_lock lock(memo.mutex);
    if (static_cast<std::size_t>(n) < memo.values.size()) return memo.values[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(memo.mutex);
  auto& b = memo.values;
  // sum_{i<=m} binom(m+1, i) B_i = m + 1 for the B_1 = +1/2 convention.
  while (b.size() <= static_cast<std::size_t>(n)) {
    const auto m = static_cast<std::uint64_t>(b.size());
    if (m >= 3 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    Rational acc(static_cast<unsigned long>(m + 1));
    for (std::uint64_t i = 0; i < m; ++i) {
      if (b[i] != 0) acc -= b[i] * binomial(m + 1, i);
    }
    b.push_back(acc / static_cast<unsigned long>(m + 1));
  }
  return b[static_cast<std::size_t>(n)];
}

void clear_number_caches() {
  explicit_cache().clear();
  auto& memo = bernoulli_memo();
  std::unique_lock lock(memo.mutex);
  memo.values.assign(1, Rational(1));
}

}  // namespace mpbern
