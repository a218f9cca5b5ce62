#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// rational is a thin wrapper over boost::multiprecision::cpp_rational pinning
// the contracts the rest of the library relies on: values are always in lowest
// terms with positive denominator, floor/ceil are the mathematical ones (round
// toward -infinity / +infinity), and text form is "p" or "p/q".

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace apfree {

using integer = boost::multiprecision::cpp_int;

// floor(a/b) for b > 0. cpp_int division truncates toward zero, so correct
// the quotient for negative dividends with a remainder.
inline integer floor_div(const integer& a, const integer& b) {
  integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// ceil(a/b) for b > 0.
inline integer ceil_div_int(const integer& a, const integer& b) {
  return floor_div(a + b - 1, b);
}

inline integer parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(s));
  }
  return integer(std::string(s));
}

class rational {
 public:
  rational() = default;
  rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  rational(integer n) : v_(std::move(n)) {}
  rational(const integer& num, const integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    integer n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    integer g = boost::multiprecision::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    v_ = backend(n, d);
  }

  integer num() const { return boost::multiprecision::numerator(v_); }
  integer den() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return den() == 1; }

  integer floor() const { return floor_div(num(), den()); }
  integer ceil() const { return ceil_div_int(num(), den()); }

  // Fractional part in [0, 1): x - floor(x).
  rational frac() const { return *this - rational(floor()); }

  friend rational operator+(const rational& a, const rational& b) { return rational(backend(a.v_ + b.v_), raw_t{}); }
  friend rational operator-(const rational& a, const rational& b) { return rational(backend(a.v_ - b.v_), raw_t{}); }
  friend rational operator*(const rational& a, const rational& b) { return rational(backend(a.v_ * b.v_), raw_t{}); }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return rational(backend(a.v_ / b.v_), raw_t{});
  }
  rational operator-() const { return rational(backend(-v_), raw_t{}); }
  rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
  rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
  rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
  rational& operator/=(const rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
  }

  // Accepts "p" or "p/q" with optional leading sign on p. For the richer
  // expression grammar (sqrt, parentheses) see parse.hpp.
  static rational parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return rational(parse_integer(s));
    integer num = parse_integer(s.substr(0, slash));
    integer den = parse_integer(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive: " + std::string(s));
    return rational(num, den);
  }

  // Closest double, for diagnostics and plot output only.
  double to_double() const { return static_cast<double>(v_); }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

 private:
  using backend = boost::multiprecision::cpp_rational;
  struct raw_t {};
  rational(backend v, raw_t) : v_(std::move(v)) {}
  backend v_;
};

inline rational abs(const rational& r) { return r.sign() < 0 ? -r : r; }

// ceil(a / b) for rational a and b > 0. Counts progression terms below a cutoff.
inline integer ceil_div(const rational& a, const rational& b) {
  if (b.sign() <= 0) throw std::invalid_argument("ceil_div requires positive divisor");
  return (a / b).ceil();
}

// Three-way compare used generically by interval_set_t.
inline int compare3(const rational& a, const rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

inline int sign_of(const rational& r) { return r.sign(); }

inline integer pow_int(const integer& base, std::int64_t exp) {
  integer acc = 1, b = base;
  for (std::int64_t e = exp; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    if (e > 1) b *= b;
  }
  return acc;
}

}  // namespace apfree
