#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace shadowlab {

/// Exact rational number, always in lowest terms with positive denominator.
/// All incidence decisions in the library run on these; doubles appear only
/// when emitting SVG.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                  // NOLINT
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw_zero_denominator();
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Accepts "p" or "p/q" with optional sign; rejects anything else.
  static Rational parse(const std::string& token);

  std::string str() const;
  double to_double() const { return v_.get_d(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  /// Largest integer <= *this.
  mpz_class floor_z() const;
  /// *this - floor(*this), in [0,1).
  Rational frac() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw_zero_denominator();
    v_ /= o.v_;
    return *this;
  }

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

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  [[noreturn]] static void throw_zero_denominator();
  mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Signed distance of x to the nearest integer multiple representative of y on
/// the circle R/Z: the unique value in (-1/2, 1/2] congruent to x - y.
Rational circle_distance(const Rational& x, const Rational& y);

}  // namespace shadowlab
