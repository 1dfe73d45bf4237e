#include "mpbern/core.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace mpbern {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer z;
    if (z.set_str(std::string(s), 10) != 0) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return z;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational inverse_power(std::int64_t m, int k) {
  if (m == 0) throw std::domain_error("inverse_power of zero");
  Integer base(static_cast<long>(m));
  Integer pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k <= 0) return Rational(pw);
  return make_rational(Integer(1), pw);
}

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------- Index

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("index must have depth >= 1");
}

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("index '" + std::string(text) + "': " + what + " at position " +
                                std::to_string(pos + 1));
  };
  skip_ws();
  if (pos == text.size()) fail("empty index");
  while (true) {
    skip_ws();
    // from_chars rejects a leading '+', accept it explicitly.
    if (pos < text.size() && text[pos] == '+') ++pos;
    int value = 0;
    const char* first = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, end, value);
    if (ec == std::errc::result_out_of_range) fail("entry out of range");
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos += static_cast<std::size_t>(ptr - first);
    parts.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail(std::string("unexpected character '") + text[pos] + "'");
    ++pos;
  }
  return Index(std::move(parts));
}

Index Index::with_last_decremented() const {
  auto parts = parts_;
  parts.back() -= 1;
  return Index(std::move(parts));
}

std::string Index::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Index& k) { return os << '(' << k.to_string() << ')'; }

std::int64_t weight(const Index& k) {
  std::int64_t s = 0;
  for (int v : k.parts()) s += v;
  return s;
}

Index plus_part(const Index& k) {
  std::vector<int> parts(k.parts().begin(), k.parts().end());
  for (int& v : parts) v = v > 0 ? v : 0;
  return Index(std::move(parts));
}

std::int64_t wt_plus(const Index& k) {
  std::int64_t s = 0;
  for (int v : k.parts()) s += v > 0 ? v : 0;
  return s;
}

// ---------------------------------------------------------------- primes

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
}

// ---------------------------------------------------------------- valuations

std::int64_t Valuation::value() const {
  if (!finite_) throw std::logic_error("value() of infinite valuation");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (!a.finite_ || !b.finite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
  return a.value_ <=> b.value_;
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Valuation ord(const Integer& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  Integer rest;
  Integer prime(static_cast<long>(p.value()));
  const auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation(static_cast<std::int64_t>(e));
}

Valuation ord(const Rational& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(ord(x.get_num(), p).value() - ord(x.get_den(), p).value());
}

std::int64_t ord(std::int64_t x, const Prime& p) {
  if (x == 0) throw std::domain_error("ord of zero as machine integer");
  std::int64_t e = 0;
  while (x % p.value() == 0) {
    x /= p.value();
    ++e;
  }
  return e;
}

std::int64_t ord_factorial(std::uint64_t n, const Prime& p) {
  std::int64_t e = 0;
  const auto q = static_cast<std::uint64_t>(p.value());
  while (n) {
    n /= q;
    e += static_cast<std::int64_t>(n);
  }
  return e;
}

bool congruent_mod_pN(const Rational& a, const Rational& b, const Prime& p, std::int64_t N) {
  return ord(Rational(a - b), p).at_least(N);
}

Rational prime_power(const Prime& p, std::int64_t e) {
  return inverse_power(p.value(), static_cast<int>(-e));
}

}  // namespace mpbern
