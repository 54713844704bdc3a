#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "periods/exactnum.hpp"

namespace periods {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t variables = 0) : nvars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  /// x_axis in `variables` variables.
  static Polynomial variable(std::size_t variables, std::size_t axis);

  std::size_t variables() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree_in(std::size_t axis) const;
  unsigned total_degree() const;

  /// Adds c * x^e; drops the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  Rational eval(std::span<const Rational> point) const;
  /// Exact evaluation at the double point, rounded once to nearest.
  double eval(std::span<const double> point) const;

  /// q(x) = p(x with x_axis replaced by x_axis - offset).
  Polynomial shift(std::size_t axis, const Rational& offset) const;
  /// q(x) = p(x with x_axis replaced by factor * x_axis).
  Polynomial scale_axis(std::size_t axis, const Rational& factor) const;
  /// Same polynomial viewed in `total` variables, own variables starting at `offset`.
  Polynomial embed(std::size_t total, std::size_t offset) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form using x0, x1, ...
  std::string str() const;

 private:
  void check_point(std::size_t n) const;

  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace periods
