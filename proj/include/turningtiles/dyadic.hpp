#pragma once

// Dyadic rationals m / 2^k kept in lowest terms. The number-valued games of
// the engine are parameterized by this type; non-dyadic fractions are
// rejected at construction.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "turningtiles/core.hpp"

namespace tt {

class DyadicRational {
 public:
  constexpr DyadicRational() = default;

  constexpr DyadicRational(long long numerator) : num_(numerator) {}  // NOLINT: implicit from integers

  constexpr DyadicRational(long long numerator, int exponent)
      : num_(numerator), exp_(exponent) {
    if (exponent < 0 || exponent > 62)
      throw std::invalid_argument("dyadic exponent out of range");
    normalize();
  }

  // numerator / denominator; the denominator must be a positive power of two.
  static constexpr DyadicRational from_fraction(long long numerator, long long denominator) {
    if (denominator <= 0 || (denominator & (denominator - 1)) != 0)
      throw std::invalid_argument("denominator must be a positive power of two");
    int exponent = 0;
    while ((1ll << exponent) != denominator) ++exponent;
    return DyadicRational(numerator, exponent);
  }

  constexpr long long numerator() const { return num_; }
  constexpr int exponent() const { return exp_; }
  constexpr long long denominator() const { return 1ll << exp_; }

  constexpr bool is_integer() const { return exp_ == 0; }

  // Largest integer <= value (arithmetic shift rounds toward -infinity).
  constexpr long long floor() const { return num_ >> exp_; }
  constexpr long long ceil() const { return -((-num_) >> exp_); }

  friend constexpr DyadicRational operator-(const DyadicRational& a) {
    return DyadicRational(-a.num_, a.exp_);
  }
  friend constexpr DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return DyadicRational((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }
  friend constexpr DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    return a + (-b);
  }

  friend constexpr bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;  // lowest terms are unique
  }
  friend constexpr bool operator<(const DyadicRational& a, const DyadicRational& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
  }
  friend constexpr bool operator>(const DyadicRational& a, const DyadicRational& b) { return b < a; }
  friend constexpr bool operator<=(const DyadicRational& a, const DyadicRational& b) { return !(b < a); }
  friend constexpr bool operator>=(const DyadicRational& a, const DyadicRational& b) { return !(a < b); }
  friend constexpr bool operator!=(const DyadicRational& a, const DyadicRational& b) { return !(a == b); }

  std::string to_string() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(denominator());
  }

 private:
  constexpr void normalize() {
    while (exp_ > 0 && num_ % 2 == 0) {
      num_ /= 2;
      --exp_;
    }
  }

  long long num_ = 0;
  int exp_ = 0;  // value = num_ / 2^exp_; exp_ == 0 or num_ odd
};

// The birthday-minimal dyadic strictly inside the open interval (lo, hi):
// the integer of least magnitude if one fits, otherwise the fraction with
// the smallest denominator.
inline DyadicRational simplest_between(const DyadicRational& lo, const DyadicRational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  const DyadicRational zero(0);
  if (lo < zero && zero < hi) return zero;
  if (lo >= zero) {
    const DyadicRational n(lo.floor() + 1);  // smallest integer above lo
    if (n < hi) return n;
  } else {
    const DyadicRational n(hi.ceil() - 1);  // hi <= 0: largest integer below hi
    if (lo < n) return n;
  }
  for (int k = 1; k <= 62; ++k) {
    // smallest multiple of 1/2^k strictly above lo; odd at the first k that
    // fits, so the result is already in lowest terms
    const long long m = (k >= lo.exponent()
                             ? lo.numerator() << (k - lo.exponent())
                             : lo.numerator() >> (lo.exponent() - k)) +
                        1;
    const DyadicRational candidate(m, k);
    if (lo < candidate && candidate < hi) return candidate;
  }
  throw std::invalid_argument("simplest_between: interval too narrow");
}

}  // namespace tt
