#include "periods/upoly.hpp"

#include <sstream>

namespace periods {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& a) { return UPoly({-a, Rational(1)}); }

UPoly UPoly::from_polynomial(const Polynomial& p) {
  if (p.variables() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a univariate polynomial");
  std::vector<Rational> v(p.is_zero() ? 0 : p.degree_in(0) + 1);
  for (const auto& [e, c] : p.terms()) v[e[0]] = c;
  return UPoly(std::move(v));
}

Polynomial UPoly::to_polynomial() const {
  Polynomial p(1);
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term({static_cast<std::uint32_t>(i)}, c_[i]);
  return p;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double UPoly::eval(long double x) const {
  long double acc = 0.0L;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::integral() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * leading().inverse();
}

UPoly UPoly::pow(unsigned k) const {
  UPoly out(Rational(1));
  UPoly base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) os << mag << (i ? "*" : "");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  Rational inv = b.leading().inverse();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rational q = rem[static_cast<std::size_t>(i) + bc.size() - 1] * inv;
    quo[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace periods
