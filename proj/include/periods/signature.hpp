#pragma once

#include <map>
#include <optional>
#include <string>

#include "periods/exactnum.hpp"

namespace periods {

/// Product of atoms with multiplicities, e.g. {log(2):1, pi:2}.
using Monomial = std::map<std::string, unsigned>;

std::string monomial_key(const Monomial& m);

/// Commutative normal form of a witness's symbolic value: a polynomial in
/// named atoms with Gaussian-rational coefficients. Large expansions collapse
/// to an opaque tag that never matches the registry.
class Signature {
 public:
  static constexpr std::size_t kMaxTerms = 256;

  static Signature zero() { return Signature(); }
  static Signature constant(const GaussianRational& c);
  static Signature atom(const std::string& name);
  static Signature opaque();

  bool is_opaque() const { return opaque_; }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  /// c * M with c != 0, if the signature is a single term.
  std::optional<std::pair<GaussianRational, Monomial>> as_monomial() const;

  Signature pow(unsigned k) const;
  Signature scaled(const GaussianRational& c) const;

  friend Signature operator+(const Signature& a, const Signature& b);
  friend Signature operator*(const Signature& a, const Signature& b);
  friend Signature operator-(const Signature& a) { return a.scaled({Rational(-1), Rational()}); }
  friend bool operator==(const Signature&, const Signature&) = default;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);

  std::map<Monomial, GaussianRational> terms_;
  bool opaque_ = false;
};

}  // namespace periods
