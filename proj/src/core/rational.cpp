#include "gsmon/core/rational.hpp"

#include <numeric>

#include "gsmon/core/errors.hpp"

namespace gsmon {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("uint64 addition overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("uint64 multiplication overflow");
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArithmeticOverflow("zero denominator");
  if (n == INT64_MIN || d == INT64_MIN) throw ArithmeticOverflow("int64 minimum in rational");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  try {
    std::size_t slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw FixtureError("bad rational '" + s + "'");
      return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    std::size_t ua = 0, ub = 0;
    std::int64_t n = std::stoll(a, &ua), d = std::stoll(b, &ub);
    if (ua != a.size() || ub != b.size()) throw FixtureError("bad rational '" + s + "'");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw FixtureError("bad rational '" + s + "'");
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t l = checked_mul(a.den_ / g, b.den_);
  return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  std::int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ArithmeticOverflow("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace gsmon
