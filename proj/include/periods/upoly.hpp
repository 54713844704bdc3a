#pragma once

#include <string>
#include <utility>
#include <vector>

#include "periods/polynomial.hpp"

namespace periods {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  UPoly(const Rational& c) : UPoly(std::vector<Rational>{c}) {}  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& c, unsigned degree);
  /// x - a
  static UPoly linear(const Rational& a);
  static UPoly from_polynomial(const Polynomial& p);
  Polynomial to_polynomial() const;

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Rational eval(const Rational& x) const;
  long double eval(long double x) const;

  UPoly derivative() const;
  UPoly integral() const;  // zero constant term
  UPoly monic() const;
  UPoly pow(unsigned k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a * Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace periods
