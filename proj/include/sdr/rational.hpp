#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdr {

using Index = std::int64_t;

/// Library-wide failure type: parse errors, violated preconditions, bad input
/// files. The message names the offending token, index, or entry.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact arbitrary-precision rational, the scalar of every triangle entry.
/// Always canonical: denominator > 0, gcd(|numerator|, denominator) = 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

  /// Parses an optional sign followed by "p" or "p/q", q > 0, digits only.
  static Rat parse(std::string_view text);

  /// Renders "p/q", or plain "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat reciprocal() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  /// Exact integer power; e >= 0.
  Rat pow(Index e) const;

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace sdr
