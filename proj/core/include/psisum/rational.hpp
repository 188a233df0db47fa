#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace psisum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator, so two
/// Rationals compare equal exactly when their numerators and denominators
/// are identical.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t value) : num_(value), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value), den_(1) {}                // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", always with an explicit denominator.
  std::string to_string() const;
  /// "num" for integers, "num/den" otherwise.
  std::string to_display_string() const;

  /// Parses "num" or "num/den".
  static Rational parse(const std::string& text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace psisum
