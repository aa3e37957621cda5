#include "levelstruct/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace levelstruct {

namespace {

using Int = Rational::Int;

Int abs128(Int v) { return v < 0 ? -v : v; }

Int gcd128(Int a, Int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Rational: multiplication overflow");
  return out;
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Rational: addition overflow");
  return out;
}

}  // namespace

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Int g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

std::int64_t Rational::to_int64() const {
  if (den_ != 1) throw std::domain_error("Rational: value " + to_string() + " is not an integer");
  if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("Rational: value does not fit in 64 bits");
  return static_cast<std::int64_t>(num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g*d)
  Int g = gcd128(den_, rhs.den_);
  Int n = checked_add(checked_mul(num_, rhs.den_ / g), checked_mul(rhs.num_, den_ / g));
  Int d = checked_mul(den_ / g, rhs.den_);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  Int g1 = gcd128(num_, rhs.den_);
  Int g2 = gcd128(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  Int n = checked_mul(num_ / g1, rhs.num_ / g2);
  Int d = checked_mul(den_ / g2, rhs.den_ / g1);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  Rational inv;
  inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
  inv.den_ = abs128(rhs.num_);
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  Int l = checked_mul(lhs.num_, rhs.den_);
  Int r = checked_mul(rhs.num_, lhs.den_);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string int128_to_string(Int value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Work with negative magnitudes so the minimum value does not overflow.
  Int v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(-(v % 10));
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> Int {
    if (s.empty()) throw std::invalid_argument("Rational::parse: malformed '" + text + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-') {
      negative = true;
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("Rational::parse: malformed '" + text + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Rational::parse: malformed '" + text + "'");
      v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return negative ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  Int d = parse_int(text.substr(slash + 1));
  if (d <= 0) throw std::invalid_argument("Rational::parse: denominator must be positive in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace levelstruct
