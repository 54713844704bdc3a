#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "periods/error.hpp"

namespace periods {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q", with an optional leading sign.
  static Rational parse(std::string_view text);
  /// Exact value of a finite double.
  static Rational from_double(double value);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Correctly rounded (round-to-nearest-even).
  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  Rational abs() const { return Rational(::abs(q_)); }
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// re + i*im with rational parts. Used for scalar factors and exact
/// algebraic values of witnesses.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  std::string str() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// a + b*sqrt(d) with d a non-negative square-free integer; b == 0 implies d == 0.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  /// Any non-negative radicand; square factors are pulled into b.
  QuadSurd(const Rational& a, const Rational& b, const mpz_class& radicand);

  /// sqrt(r) for r >= 0, as c*sqrt(d).
  static QuadSurd sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  long double to_long_double() const;
  std::string str() const;

  QuadSurd conjugate() const { return QuadSurd(a_, -b_, d_); }
  QuadSurd abs() const { return sign() < 0 ? -*this : *this; }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

 private:
  Rational a_;
  Rational b_;
  mpz_class d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadSurd& s);

/// Square-free part s of n > 0 with n = f^2 * s.
void split_square_free(const mpz_class& n, mpz_class& square_root_part, mpz_class& square_free);

inline constexpr int kMaxBernoulliIndex = 64;

/// B_k in the all-positive convention: B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
/// (equal to |B_{2k}| in the modern signed indexing). 1 <= k <= 64.
const Rational& bernoulli(int k);

}  // namespace periods
