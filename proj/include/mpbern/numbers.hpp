#ifndef MPBERN_NUMBERS_HPP
#define MPBERN_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mpbern/core.hpp"
#include "mpbern/polylog.hpp"

namespace mpbern {

/// Which generating function: Li(1-e^{-t}) over (1-e^{-t}) for B, over
/// (e^t - 1) for C; the star families use the non-strict polylogarithm.
enum class Family { B, C, BStar, CStar };

enum class Method { Explicit, Series };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
/// Accepts "B", "C", "Bstar"/"B*", "Cstar"/"C*" (case-insensitive).
std::optional<Family> parse_family(std::string_view text);
std::optional<Method> parse_method(std::string_view text);

inline constexpr Family kAllFamilies[] = {Family::B, Family::C, Family::BStar, Family::CStar};

ChainVariant variant_of(Family f);
bool is_c_family(Family f);
/// The family with the same B/C role and the given chain variant.
Family family_of(bool c_family, ChainVariant v);

struct MpbValue {
  Index k;
  std::int64_t n;
  Family family;
  Rational value;
  Method method;

  friend bool operator==(const MpbValue&, const MpbValue&) = default;
};

/// Closed form from the Stirling expansion of x^n:
///   (-1)^n sum_{m<=n+1} chain(k, m) (-1)^{m-1} (m-1)! S(n, m-1)
/// with S(n+1, m) in place of S(n, m-1) for the C families.
/// Results are memoised per (family, k).
Rational mpb_explicit(const Index& k, std::int64_t n, Family family);
/// Values for n = 0..n_max.
std::vector<Rational> mpb_explicit_range(const Index& k, std::int64_t n_max, Family family);

/// n! [t^n] of the defining generating function, built from truncated series.
Rational mpb_series(const Index& k, std::int64_t n, Family family);
std::vector<Rational> mpb_series_range(const Index& k, std::int64_t n_max, Family family);

Rational mpb_value(const Index& k, std::int64_t n, Family family, Method method);

/// B_n = sum_i binom(n, i) C_i.
bool relation_B_from_C(const Index& k, std::int64_t n, ChainVariant v = ChainVariant::Strict);
/// C_n = sum_i (-1)^{n-i} binom(n, i) B_i.
bool relation_C_from_B(const Index& k, std::int64_t n, ChainVariant v = ChainVariant::Strict);
/// B_n = C_n + C_{n-1} at the index with its last entry lowered by one; n >= 1.
bool relation_shift(const Index& k, std::int64_t n, ChainVariant v = ChainVariant::Strict);

/// The distribution attached to Li_k applied to x^n:
///   sum_j (-1)^j S(n, j) j! chain(k, j+1).
/// Equals (-1)^n B_n for the matching family.
Rational distribution_moment(const Index& k, std::int64_t n, ChainVariant v = ChainVariant::Strict);

/// Classical Bernoulli numbers from t e^t / (e^t - 1), so B_1 = +1/2.
/// Odd n >= 3 return zero without touching the recurrence.
Rational bernoulli(std::int64_t n);

/// Drops all memoised values (tests use this to time cold paths).
void clear_number_caches();

}  // namespace mpbern

#endif  // MPBERN_NUMBERS_HPP
