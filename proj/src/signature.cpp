#include "periods/signature.hpp"

#include <sstream>

namespace periods {

std::string monomial_key(const Monomial& m) {
  std::string out;
  for (const auto& [atom, power] : m) {
    if (!out.empty()) out += "*";
    out += atom;
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

Signature Signature::constant(const GaussianRational& c) {
  Signature s;
  s.add_term({}, c);
  return s;
}

Signature Signature::atom(const std::string& name) {
  Signature s;
  s.add_term({{name, 1}}, {Rational(1), Rational()});
  return s;
}

Signature Signature::opaque() {
  Signature s;
  s.opaque_ = true;
  return s;
}

void Signature::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::pair<GaussianRational, Monomial>> Signature::as_monomial() const {
  if (opaque_ || terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

Signature Signature::scaled(const GaussianRational& c) const {
  if (opaque_) return c.is_zero() ? zero() : *this;
  Signature out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

Signature operator+(const Signature& a, const Signature& b) {
  if (a.opaque_ || b.opaque_) return Signature::opaque();
  Signature out = a;
  for (const auto& [m, v] : b.terms_) out.add_term(m, v);
  if (out.terms_.size() > Signature::kMaxTerms) return Signature::opaque();
  return out;
}

Signature operator*(const Signature& a, const Signature& b) {
  if ((!a.opaque_ && a.terms_.empty()) || (!b.opaque_ && b.terms_.empty())) return Signature::zero();
  if (a.opaque_ || b.opaque_) return Signature::opaque();
  if (a.terms_.size() * b.terms_.size() > Signature::kMaxTerms * 4) return Signature::opaque();
  Signature out;
  for (const auto& [ma, va] : a.terms_) {
    for (const auto& [mb, vb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [atom, p] : mb) m[atom] += p;
      out.add_term(m, va * vb);
    }
  }
  if (out.terms_.size() > Signature::kMaxTerms) return Signature::opaque();
  return out;
}

Signature Signature::pow(unsigned k) const {
  if (auto mono = as_monomial()) {
    GaussianRational c{Rational(1), Rational()};
    for (unsigned i = 0; i < k; ++i) c = c * mono->first;
    Monomial m = mono->second;
    for (auto& [atom, p] : m) p *= k;
    Signature out;
    out.add_term(m, c);
    return out;
  }
  Signature out = constant({Rational(1), Rational()});
  for (unsigned i = 0; i < k; ++i) {
    out = out * *this;
    if (out.opaque_) break;
  }
  return out;
}

std::string Signature::str() const {
  if (opaque_) return "<opaque>";
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string key = monomial_key(m);
    bool unit = c == GaussianRational{Rational(1), Rational()};
    if (key.empty()) {
      os << (c.is_real() ? c.re.str() : "(" + c.str() + ")");
    } else if (unit) {
      os << key;
    } else {
      os << (c.is_real() ? c.re.str() : "(" + c.str() + ")") << "*" << key;
    }
  }
  return os.str();
}

}  // namespace periods
