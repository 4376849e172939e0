#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "diocurve/errors.hpp"

namespace diocurve {

/// Exact arbitrary-precision rational, always in canonical form:
/// den > 0, gcd(|num|, den) = 1, zero stored as 0/1. Immutable in
/// spirit: every operation returns a fresh canonical value, so Rats
/// can be shared across threads freely.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}     // NOLINT: implicit by design, enables 2 * x
  Rat(long n) : q_(static_cast<signed long>(n)) {}
  Rat(long n, long d);
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(const mpz_class& n) : q_(n) {}

  /// Accepts "p", "p/q", optional leading sign, base 10.
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_), canonical_tag{}); }
  Rat abs() const { return Rat(mpq_class(::abs(q_)), canonical_tag{}); }
  Rat inv() const;

  /// Integer power; negative exponents require a nonzero base.
  Rat pow(long e) const;

  /// "num/den", or just "num" when den == 1.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(mpq_class(a.q_ + b.q_), canonical_tag{});
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(mpq_class(a.q_ - b.q_), canonical_tag{});
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(mpq_class(a.q_ * b.q_), canonical_tag{});
  }
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  struct canonical_tag {};
  Rat(mpq_class q, canonical_tag) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Floor of the exact integer square root; errors on negative input.
mpz_class int_isqrt(const mpz_class& n);

/// True iff x is the square of a rational (canonical form makes this
/// a pair of integer perfect-square tests).
bool is_perfect_square(const Rat& x);

/// The unique nonnegative rational square root; NotASquare otherwise.
Rat sqrt_exact(const Rat& x);

/// Exact k-th root when one exists in the rationals (k >= 1).
std::optional<Rat> exact_root(const Rat& x, unsigned k);

}  // namespace diocurve
