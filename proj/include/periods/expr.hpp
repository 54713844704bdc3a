#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "periods/witness.hpp"

namespace periods {

struct Expr {
  enum class Kind { Builtin, Literal, Add, Mul, Neg, Scale, Pow };

  Kind kind = Kind::Literal;
  /// Builtin: pi, log, pi_log2, pi_squared, zeta, sqrt.
  std::string name;
  std::vector<Rational> params;
  /// Literal value (real part only) or Scale factor.
  GaussianRational value;
  unsigned exponent = 1;
  std::vector<Expr> args;

  static Expr builtin(std::string name, std::vector<Rational> params = {});
  static Expr literal(const Rational& q);
  static Expr add(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr neg(Expr a);
  static Expr scale(const GaussianRational& c, Expr a);
  static Expr pow(Expr a, unsigned m);

  friend bool operator==(const Expr&, const Expr&) = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Expr parse_expr(const std::string& text);
std::string print_expr(const Expr& e);
/// Builds the witness; builtin argument errors surface here, not in the parser.
PeriodWitness to_witness(const Expr& e, const Registry& registry = default_registry());

}  // namespace periods
