#include "periods/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace periods {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t axis) {
  if (axis >= variables) throw Error(ErrorKind::OutOfRange, "variable index out of range");
  Polynomial p(variables);
  Exponents e(variables, 0);
  e[axis] = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](auto v) { return v == 0; }));
}

unsigned Polynomial::degree_in(std::size_t axis) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(axis));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::check_point(std::size_t n) const {
  if (n != nvars_) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(n) + " coordinates, polynomial has " + std::to_string(nvars_));
  }
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  check_point(point.size());
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) term *= point[i].pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

double Polynomial::eval(std::span<const double> point) const {
  check_point(point.size());
  std::vector<Rational> exact;
  exact.reserve(point.size());
  for (double v : point) exact.push_back(Rational::from_double(v));
  return eval(std::span<const Rational>(exact)).to_double();
}

Polynomial Polynomial::shift(std::size_t axis, const Rational& offset) const {
  if (axis >= nvars_) throw Error(ErrorKind::OutOfRange, "shift axis out of range");
  if (offset.is_zero()) return *this;
  Polynomial out(nvars_);
  Rational minus = -offset;
  for (const auto& [e, c] : terms_) {
    // (x - offset)^k = sum_j C(k,j) x^j (-offset)^(k-j)
    unsigned k = e[axis];
    mpz_class binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      Exponents f = e;
      f[axis] = j;
      out.add_term(f, c * Rational(binom, 1) * minus.pow(k - j));
      binom = binom * (k - j) / (j + 1);
    }
  }
  return out;
}

Polynomial Polynomial::scale_axis(std::size_t axis, const Rational& factor) const {
  if (axis >= nvars_) throw Error(ErrorKind::OutOfRange, "scale axis out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * factor.pow(e[axis]));
  return out;
}

Polynomial Polynomial::embed(std::size_t total, std::size_t offset) const {
  if (offset + nvars_ > total) throw Error(ErrorKind::DimensionMismatch, "embedding does not fit");
  Polynomial out(total);
  for (const auto& [e, c] : terms_) {
    Exponents f(total, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest terms first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = true;
    for (auto v : e) unit = unit && v == 0;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool coef_printed = false;
    if (unit || mag != Rational(1)) {
      os << mag;
      coef_printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (coef_printed) os << "*";
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      coef_printed = true;
    }
  }
  return os.str();
}

}  // namespace periods
