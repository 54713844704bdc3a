#include "periods/exactnum.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>
#include <vector>

namespace periods {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::MixedRadicand: return "mixed_radicand";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::EmptyDomain: return "empty_domain";
    case ErrorKind::UnknownName: return "unknown_name";
    case ErrorKind::ZeroPolynomial: return "zero_polynomial";
    case ErrorKind::EndpointRoot: return "endpoint_root";
    case ErrorKind::PoleInInterval: return "pole_in_interval";
    case ErrorKind::Unfactorable: return "unfactorable";
    case ErrorKind::InconsistentFactorization: return "inconsistent_factorization";
    case ErrorKind::NonConvergence: return "non_convergence";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw Error(ErrorKind::InvalidArgument, "malformed integer '" + std::string(s) + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::InvalidArgument, "malformed integer '" + std::string(s) + "'");
    }
    std::string owned(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(owned, 10);
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  mpz_class num = parse_int(trim(text.substr(0, slash)));
  mpz_class den = parse_int(trim(text.substr(slash + 1)));
  return Rational(num, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
  mpq_class q;
  q = value;  // exact
  return Rational(q);
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q_.get_mpq_t(), MPFR_RNDN);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

long double Rational::to_long_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  mpfr_set_q(tmp, q_.get_mpq_t(), MPFR_RNDN);
  long double out = mpfr_get_ld(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

std::string Rational::str() const { return q_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  return re.str() + "+" + im.str() + "i";
}

// ---------------------------------------------------------------- QuadSurd

void split_square_free(const mpz_class& n, mpz_class& root, mpz_class& free) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "square-free split needs n > 0");
  root = 1;
  free = 1;
  mpz_class rest = n;
  for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    mpz_class pp = p;
    if (pp * pp > rest) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) root *= p;
    if (count % 2) free *= p;
  }
  if (rest > 1) {
    // Either prime, a perfect square of a prime, or a product of two large
    // primes. Only the perfect-square case contributes to the root.
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class s = sqrt(rest);
      root *= s;
    } else {
      free *= rest;
    }
  }
}

QuadSurd::QuadSurd(const Rational& a, const Rational& b, const mpz_class& radicand) : a_(a), b_(b) {
  if (radicand < 0) throw Error(ErrorKind::InvalidArgument, "negative radicand");
  if (b_.is_zero() || radicand == 0) {
    b_ = Rational();
    d_ = 0;
    return;
  }
  mpz_class root, free;
  split_square_free(radicand, root, free);
  b_ *= Rational(root, 1);
  if (free == 1) {
    a_ += b_;
    b_ = Rational();
    d_ = 0;
  } else {
    d_ = free;
  }
}

QuadSurd QuadSurd::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of negative rational");
  if (r.is_zero()) return QuadSurd();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class n = r.numerator() * r.denominator();
  return QuadSurd(Rational(), Rational(1, r.denominator()), n);
}

namespace {

const mpz_class& common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw Error(ErrorKind::MixedRadicand,
              "cannot combine sqrt(" + x.radicand().get_str() + ") with sqrt(" + y.radicand().get_str() + ")");
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const mpz_class& d = common_radicand(x, y);
  return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const mpz_class& d = common_radicand(x, y);
  Rational dr(d, 1);
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * dr, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "surd division by zero");
  const mpz_class& d = common_radicand(x, y);
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d, 1);
  QuadSurd num = x * y.conjugate();
  return QuadSurd(num.a_ / norm, num.b_ / norm, num.d_);
}

int QuadSurd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_, 1);
  if (lhs == rhs) return 0;  // unreachable for square-free d > 1
  return lhs > rhs ? sa : sb;
}

long double QuadSurd::to_long_double() const {
  long double v = a_.to_long_double();
  if (!b_.is_zero()) v += b_.to_long_double() * std::sqrt(static_cast<long double>(d_.get_d()));
  return v;
}

std::string QuadSurd::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& s) { return os << s.str(); }

// ---------------------------------------------------------------- Bernoulli

const Rational& bernoulli(int k) {
  if (k < 1 || k > kMaxBernoulliIndex) {
    throw Error(ErrorKind::OutOfRange, "bernoulli index " + std::to_string(k) + " outside [1, 64]");
  }
  static const std::vector<Rational> table = [] {
    // Modern B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1.
    const int n_max = 2 * kMaxBernoulliIndex;
    std::vector<mpq_class> b(n_max + 1);
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
      mpq_class acc = 0;
      mpz_class binom = 1;  // C(n+1, 0)
      for (int j = 0; j < n; ++j) {
        acc += binom * b[j];
        binom = binom * (n + 1 - j) / (j + 1);
      }
      b[n] = -acc / (n + 1);
      b[n].canonicalize();
    }
    std::vector<Rational> out(kMaxBernoulliIndex + 1);
    for (int i = 1; i <= kMaxBernoulliIndex; ++i) out[i] = Rational(b[2 * i]).abs();
    return out;
  }();
  return table[k];
}

}  // namespace periods
