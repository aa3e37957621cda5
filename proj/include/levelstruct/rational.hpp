#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace levelstruct {

/// Exact fraction over 128-bit integers.
///
/// Always stored in lowest terms with a positive denominator. Every
/// arithmetic operation is overflow-checked and throws std::overflow_error
/// rather than wrapping.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(Int numerator, Int denominator);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  /// Numerator as a 64-bit value; throws std::domain_error if not integral
  /// or out of range.
  std::int64_t to_int64() const;

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;

  /// Inverse of to_string(); also accepts "p/q" with q = 1 and unreduced
  /// input. Throws std::invalid_argument on malformed text.
  static Rational parse(const std::string& text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::string int128_to_string(Rational::Int value);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace levelstruct
