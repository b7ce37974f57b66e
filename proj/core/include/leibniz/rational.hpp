#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Exact rational number over Q.
///
/// Invariants: always in lowest terms with positive denominator (canonical
/// GMP form). Serialization is "p" for integers and "p/q" otherwise, with the
/// sign on the numerator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p" or "p/q" (q > 0 after canonicalization; "3/-6" is accepted
  /// and normalized to "-1/2"). Throws ParseError on malformed input or q=0.
  static Rational parse(const std::string& s);

  /// Canonical string form: "p" or "p/q".
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;

  /// True iff this is the square of a rational (requires sign >= 0 and both
  /// numerator and denominator perfect squares).
  bool is_square() const;

  /// Exact square root; precondition is_square().
  Rational sqrt() const;

  /// Squarefree kernel: the unique squarefree integer k (sign included) with
  /// *this = k * s^2 for some rational s. Zero maps to zero.
  Rational squarefree_kernel() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact binomial coefficient C(n, k) as a Rational (0 when k > n).
Rational binomial(std::uint64_t n, std::uint64_t k);

}  // namespace leibniz
