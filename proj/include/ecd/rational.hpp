#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "ecd/error.hpp"

namespace ecd {

namespace detail {

inline long long checked_narrow(__int128 x, const char* what) {
  if (x > static_cast<__int128>(INT64_MAX) || x < static_cast<__int128>(INT64_MIN))
    throw Error(std::string(what) + ": value exceeds 64-bit range");
  return static_cast<long long>(x);
}

}  // namespace detail

/// Exact rational number over 64-bit integers (128-bit intermediates).
/// Always stored reduced with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  long long to_integer() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational& operator+=(const Rational& o) {
    return assign(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) {
    return assign(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator*=(const Rational& o) {
    return assign(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    return assign(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  Rational& assign(__int128 n, __int128 d) {
    // reduce in 128 bits before narrowing
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    num_ = detail::checked_narrow(n, "rational numerator");
    den_ = detail::checked_narrow(d, "rational denominator");
    return *this;
  }

  void normalize() { assign(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace ecd
