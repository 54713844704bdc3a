#pragma once

#include <string>
#include <vector>

#include "periods/exactnum.hpp"
#include "periods/upoly.hpp"

namespace periods::ratint {

/// num/den with den monic (its leading coefficient is folded into num).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(UPoly num, UPoly den);
  RationalFunction(const Polynomial& num, const Polynomial& den)
      : RationalFunction(UPoly::from_polynomial(num), UPoly::from_polynomial(den)) {}

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  Rational eval(const Rational& x) const;
  long double eval(long double x) const;
  RationalFunction derivative() const;

  /// Cross-multiplied equality.
  bool equals(const RationalFunction& o) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);

 private:
  UPoly num_;
  UPoly den_;
};

struct LinearFactor {
  Rational root;  // (x - root)^multiplicity
  unsigned multiplicity = 1;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// (x^2 + b x + c)^multiplicity, irreducible over Q (non-square discriminant).
struct QuadraticFactor {
  Rational b;
  Rational c;
  unsigned multiplicity = 1;

  UPoly poly() const { return UPoly({c, b, Rational(1)}); }
  Rational discriminant() const { return b * b - Rational(4) * c; }
  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

struct FactorList {
  std::vector<LinearFactor> linear;
  std::vector<QuadraticFactor> quadratic;

  /// Product of all factors (monic).
  UPoly expand() const;
  void validate() const;
};

/// Number of distinct real roots of p in (lo, hi) by Sturm sequences.
/// Throws EndpointRoot if p vanishes at either endpoint.
unsigned sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);
inline unsigned sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  return sturm_count(UPoly::from_polynomial(p), lo, hi);
}

/// Rational roots plus quadratic factors over Q; anything else is Unfactorable.
FactorList factor_denominator(const UPoly& den);

struct LinearTerm {
  std::size_t factor = 0;  // index into FactorList::linear
  unsigned power = 1;
  Rational a;  // a / (x - root)^power
};

struct QuadraticTerm {
  std::size_t factor = 0;  // index into FactorList::quadratic
  unsigned power = 1;
  Rational b;  // (b x + c) / q(x)^power
  Rational c;
};

struct PartialFractions {
  FactorList factors;
  UPoly polynomial_part;
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;

  RationalFunction recombine() const;
};

PartialFractions partial_fractions(const RationalFunction& f, const FactorList& factors);

/// coeff * log|arg(x)|
struct LogPolyTerm {
  Rational coeff;
  UPoly arg;
};

/// Antiderivative of coeff / ((x + shift)^2 + k), k != 0:
/// arctan form for k > 0, log-ratio form for k < 0.
struct QuadBaseTerm {
  Rational coeff;
  Rational shift;
  Rational k;
};

struct Antiderivative {
  RationalFunction rational;
  std::vector<LogPolyTerm> logs;
  std::vector<QuadBaseTerm> quad_bases;

  /// Exact derivative as a rational function.
  RationalFunction derivative() const;
};

Antiderivative antiderivative(const PartialFractions& pf);

struct SurdTerm {
  QuadSurd coeff;
  QuadSurd arg;
};

/// constant + sum a_i arctan(u_i) + sum b_j log(v_j), v_j > 0.
struct ClosedForm {
  QuadSurd constant;
  std::vector<SurdTerm> arctan;
  std::vector<SurdTerm> log;

  long double value() const;
  std::string str() const;
};

ClosedForm evaluate(const Antiderivative& F, const Rational& lo, const Rational& hi);

ClosedForm integrate_definite(const RationalFunction& f, const Rational& lo, const Rational& hi);
/// Same, with a caller-supplied factorization of the denominator.
ClosedForm integrate_definite(const RationalFunction& f, const FactorList& factors, const Rational& lo,
                              const Rational& hi);

/// Adaptive Gauss-Kronrod (7/15) integral with estimated error <= tol.
double quad_oracle(const RationalFunction& f, const Rational& lo, const Rational& hi, double tol = 1e-10);

}  // namespace periods::ratint
