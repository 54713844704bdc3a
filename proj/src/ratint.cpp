#include "periods/ratint.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <sstream>

namespace periods::ratint {

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "denominator is identically zero");
  Rational lead = den.leading();
  num_ = num * lead.inverse();
  den_ = den.monic();
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw Error(ErrorKind::PoleInInterval, "pole at x = " + x.str());
  return num_.eval(x) / d;
}

long double RationalFunction::eval(long double x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction RationalFunction::derivative() const {
  UPoly n = num_.derivative() * den_ - num_ * den_.derivative();
  UPoly d = den_ * den_;
  UPoly g = gcd(n, d);
  if (n.is_zero()) return RationalFunction(UPoly(), UPoly(Rational(1)));
  return RationalFunction(divmod(n, g).first, divmod(d, g).first);
}

bool RationalFunction::equals(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  UPoly n = a.num_ * b.den_ + b.num_ * a.den_;
  if (n.is_zero()) return RationalFunction(UPoly(), UPoly(Rational(1)));
  UPoly d = a.den_ * b.den_;
  UPoly g = gcd(n, d);
  return RationalFunction(divmod(n, g).first, divmod(d, g).first);
}

// ---------------------------------------------------------------- FactorList

UPoly FactorList::expand() const {
  UPoly out(Rational(1));
  for (const auto& f : linear) out = out * UPoly::linear(f.root).pow(f.multiplicity);
  for (const auto& f : quadratic) out = out * f.poly().pow(f.multiplicity);
  return out;
}

namespace {

bool is_rational_square(const Rational& r) {
  if (r.sign() < 0) return false;
  mpz_class n = r.numerator(), d = r.denominator();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

}  // namespace

void FactorList::validate() const {
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (linear[i].multiplicity == 0) throw Error(ErrorKind::InvalidArgument, "factor multiplicity must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (linear[j].root == linear[i].root) {
        throw Error(ErrorKind::InconsistentFactorization, "repeated linear factor x - " + linear[i].root.str());
      }
    }
  }
  for (std::size_t i = 0; i < quadratic.size(); ++i) {
    const auto& q = quadratic[i];
    if (q.multiplicity == 0) throw Error(ErrorKind::InvalidArgument, "factor multiplicity must be >= 1");
    if (is_rational_square(q.discriminant())) {
      throw Error(ErrorKind::InconsistentFactorization, "quadratic factor " + q.poly().str() + " is reducible over Q");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (quadratic[j].b == q.b && quadratic[j].c == q.c) {
        throw Error(ErrorKind::InconsistentFactorization, "repeated quadratic factor " + q.poly().str());
      }
    }
  }
}

// ---------------------------------------------------------------- Sturm

unsigned sturm_count(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "sturm_count of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "sturm_count needs lo < hi");
  if (p.eval(lo).is_zero() || p.eval(hi).is_zero()) {
    throw Error(ErrorKind::EndpointRoot, "polynomial vanishes at an interval endpoint");
  }
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Only the sign matters; keeping remainders monic bounds coefficient growth.
    seq.push_back(-r * r.leading().abs().inverse());
  }
  auto variations = [&](const Rational& x) {
    unsigned v = 0;
    int prev = 0;
    for (const auto& q : seq) {
      int s = q.eval(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  unsigned vl = variations(lo), vh = variations(hi);
  return vl >= vh ? vl - vh : 0;
}

// ---------------------------------------------------------------- factoring

namespace {

using Complex = std::complex<long double>;

/// Yun's square-free decomposition of a monic polynomial: pairs (f_i, i).
std::vector<std::pair<UPoly, unsigned>> square_free_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

/// Integer coefficients with the same roots.
std::vector<mpz_class> integer_coefficients(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : p.coefficients()) out.push_back((c * Rational(l, 1)).numerator());
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

/// Positive divisors of |n| if n factors by trial division with at most `cap` divisors.
bool small_divisors(mpz_class n, std::size_t cap, std::vector<mpz_class>& out) {
  n = abs(n);
  if (n == 0) return false;
  std::vector<std::pair<mpz_class, unsigned>> primes;
  mpz_class m = n;
  for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= m; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e) primes.emplace_back(mpz_class(p), e);
  }
  if (m > 1) {
    if (m > mpz_class(1000000) * 1000000 && mpz_probab_prime_p(m.get_mpz_t(), 25) == 0) return false;
    primes.emplace_back(m, 1);
  }
  out = {mpz_class(1)};
  for (const auto& [p, e] : primes) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > cap) return false;
  }
  return true;
}

/// Durand-Kerner on a square-free polynomial.
std::vector<Complex> numeric_roots(const UPoly& p) {
  UPoly m = p.monic();
  int n = m.degree();
  std::vector<Complex> coef;
  for (const auto& c : m.coefficients()) coef.emplace_back(c.to_long_double(), 0.0L);
  long double radius = 0.0L;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(coef[static_cast<std::size_t>(i)]));
  radius = 1.0L + radius;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] = std::polar(radius * 0.5L, 2.0L * 3.14159265358979323846L * i / n + 0.4L);
  }
  auto eval = [&](Complex x) {
    Complex acc = 0.0L;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0.0L;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex den = 1.0L;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) den *= (z[i] - z[j]);
      }
      if (std::abs(den) == 0.0L) den = 1e-30L;
      Complex step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

Rational round_to(long double v, const mpz_class& denom) {
  long double scaled = v * mpz_get_d(denom.get_mpz_t());
  Rational r = Rational::from_double(static_cast<double>(std::nearbyint(scaled)));
  return r / Rational(denom, 1);
}

/// Divides out the rational roots of a square-free polynomial.
std::vector<Rational> extract_rational_roots(UPoly& f) {
  std::vector<Rational> roots;
  auto take = [&](const Rational& r) {
    if (f.degree() < 1 || !f.eval(r).is_zero()) return;
    roots.push_back(r);
    f = divmod(f, UPoly::linear(r)).first;
  };
  take(Rational(0));
  if (f.degree() < 1) return roots;
  std::vector<mpz_class> ic = integer_coefficients(f);
  std::vector<mpz_class> ps, qs;
  constexpr std::size_t kCap = 4096;
  if (small_divisors(ic.front(), kCap, ps) && small_divisors(ic.back(), kCap, qs) && ps.size() * qs.size() <= 200000) {
    for (const auto& q : qs) {
      for (const auto& p : ps) {
        if (f.degree() < 1) return roots;
        Rational r(p, q);
        take(r);
        take(-r);
      }
    }
    return roots;
  }
  // A root p/q of an integer polynomial has q | leading coefficient.
  for (const auto& z : numeric_roots(f)) {
    if (std::abs(z.imag()) > 1e-6L * std::max(1.0L, std::abs(z))) continue;
    take(round_to(z.real(), ic.back()));
  }
  return roots;
}

/// Splits a square-free polynomial without rational roots into quadratics over Q.
std::vector<UPoly> split_quadratics(UPoly f) {
  std::vector<UPoly> out;
  while (f.degree() > 2) {
    std::vector<mpz_class> ic = integer_coefficients(f);
    std::vector<Complex> z = numeric_roots(f);
    bool found = false;
    for (std::size_t i = 0; i < z.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < z.size() && !found; ++j) {
        Complex s = z[i] + z[j], pr = z[i] * z[j];
        long double tol = 1e-6L * std::max(1.0L, std::abs(s) + std::abs(pr));
        if (std::abs(s.imag()) > tol || std::abs(pr.imag()) > tol) continue;
        UPoly q({round_to(pr.real(), ic.back()), -round_to(s.real(), ic.back()), Rational(1)});
        auto [quo, rem] = divmod(f, q);
        if (!rem.is_zero()) continue;
        out.push_back(q);
        f = quo.monic();
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::Unfactorable, "cannot factor " + f.str() + " into rational linear and quadratic factors");
    }
  }
  if (f.degree() == 2) out.push_back(f.monic());
  if (f.degree() == 1) throw Error(ErrorKind::Internal, "unexpected linear residual");
  return out;
}

}  // namespace

FactorList factor_denominator(const UPoly& den) {
  if (den.degree() < 1) throw Error(ErrorKind::InvalidArgument, "denominator must have degree >= 1");
  FactorList out;
  for (auto& [part, mult] : square_free_decomposition(den.monic())) {
    UPoly f = part.monic();
    for (const auto& r : extract_rational_roots(f)) out.linear.push_back({r, mult});
    if (f.degree() >= 3 && f.degree() % 2 == 1) {
      throw Error(ErrorKind::Unfactorable, "cannot factor " + f.str() + " into rational linear and quadratic factors");
    }
    if (f.degree() >= 2) {
      for (const auto& q : split_quadratics(f)) out.quadratic.push_back({q.coeff(1), q.coeff(0), mult});
    }
  }
  std::sort(out.linear.begin(), out.linear.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  if (!(out.expand() == den.monic())) throw Error(ErrorKind::Internal, "factorization does not expand to input");
  return out;
}

// ---------------------------------------------------------------- partial fractions

namespace {

/// Solves A x = b over Q; returns false if singular.
bool solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = a[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational m = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

PartialFractions partial_fractions(const RationalFunction& f, const FactorList& factors) {
  factors.validate();
  if (!(factors.expand() == f.den())) {
    throw Error(ErrorKind::InconsistentFactorization, "factors do not multiply to the denominator " + f.den().str());
  }
  PartialFractions pf;
  pf.factors = factors;
  auto [quo, rem] = divmod(f.num(), f.den());
  pf.polynomial_part = quo;
  const std::size_t n = static_cast<std::size_t>(f.den().degree());
  if (n == 0) return pf;

  // One column per unknown: the polynomial that multiplies it after clearing denominators.
  std::vector<UPoly> columns;
  struct Slot {
    bool linear;
    std::size_t factor;
    unsigned power;
    bool constant_part;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < factors.linear.size(); ++i) {
    const auto& lf = factors.linear[i];
    UPoly lin = UPoly::linear(lf.root);
    for (unsigned j = 1; j <= lf.multiplicity; ++j) {
      columns.push_back(divmod(f.den(), lin.pow(j)).first);
      slots.push_back({true, i, j, true});
    }
  }
  for (std::size_t i = 0; i < factors.quadratic.size(); ++i) {
    const auto& qf = factors.quadratic[i];
    UPoly q = qf.poly();
    for (unsigned j = 1; j <= qf.multiplicity; ++j) {
      UPoly cofactor = divmod(f.den(), q.pow(j)).first;
      columns.push_back(cofactor * UPoly::monomial(Rational(1), 1));
      slots.push_back({false, i, j, false});
      columns.push_back(cofactor);
      slots.push_back({false, i, j, true});
    }
  }
  if (columns.size() != n) throw Error(ErrorKind::InconsistentFactorization, "factor degrees do not match");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c].coeff(static_cast<unsigned>(r));
  }
  for (std::size_t r = 0; r < n; ++r) b[r] = rem.coeff(static_cast<unsigned>(r));
  std::vector<Rational> x;
  if (!solve_linear(a, b, x)) throw Error(ErrorKind::InconsistentFactorization, "singular partial fraction system");

  for (std::size_t k = 0; k < n; ++k) {
    const Slot& s = slots[k];
    if (s.linear) {
      if (!x[k].is_zero()) pf.linear.push_back({s.factor, s.power, x[k]});
    } else if (!s.constant_part) {
      Rational bx = x[k], cx = x[k + 1];
      ++k;
      if (!bx.is_zero() || !cx.is_zero()) pf.quadratic.push_back({s.factor, s.power, bx, cx});
    }
  }
  return pf;
}

RationalFunction PartialFractions::recombine() const {
  RationalFunction acc(polynomial_part, UPoly(Rational(1)));
  for (const auto& t : linear) {
    acc = acc + RationalFunction(UPoly(t.a), UPoly::linear(factors.linear[t.factor].root).pow(t.power));
  }
  for (const auto& t : quadratic) {
    acc = acc + RationalFunction(UPoly({t.c, t.b}), factors.quadratic[t.factor].poly().pow(t.power));
  }
  return acc;
}

// ---------------------------------------------------------------- antiderivative

Antiderivative antiderivative(const PartialFractions& pf) {
  Antiderivative F;
  F.rational = RationalFunction(pf.polynomial_part.integral(), UPoly(Rational(1)));
  for (const auto& t : pf.linear) {
    UPoly lin = UPoly::linear(pf.factors.linear[t.factor].root);
    if (t.power == 1) {
      F.logs.push_back({t.a, lin});
    } else {
      Rational k(static_cast<long>(t.power) - 1);
      F.rational = F.rational + RationalFunction(UPoly(-t.a / k), lin.pow(t.power - 1));
    }
  }
  for (const auto& t : pf.quadratic) {
    const auto& qf = pf.factors.quadratic[t.factor];
    UPoly q = qf.poly();
    Rational h = qf.b / Rational(2);
    Rational k = qf.c - h * h;
    // b x + c = b (x + h) + (c - b h)
    if (!t.b.is_zero()) {
      if (t.power == 1) {
        F.logs.push_back({t.b / Rational(2), q});
      } else {
        Rational e(static_cast<long>(t.power) - 1);
        F.rational = F.rational + RationalFunction(UPoly(-t.b / (Rational(2) * e)), q.pow(t.power - 1));
      }
    }
    Rational coef = t.c - t.b * h;
    if (coef.is_zero()) continue;
    UPoly u({h, Rational(1)});
    for (unsigned p = t.power; p >= 2; --p) {
      Rational pm1(static_cast<long>(p) - 1);
      Rational denom = Rational(2) * k * pm1;
      F.rational = F.rational + RationalFunction(u * (coef / denom), q.pow(p - 1));
      coef = coef * Rational(2 * static_cast<long>(p) - 3) / denom;
    }
    F.quad_bases.push_back({coef, h, k});
  }
  return F;
}

RationalFunction Antiderivative::derivative() const {
  RationalFunction acc = rational.derivative();
  for (const auto& t : logs) acc = acc + RationalFunction(t.arg.derivative() * t.coeff, t.arg);
  for (const auto& t : quad_bases) {
    UPoly u({t.shift, Rational(1)});
    acc = acc + RationalFunction(UPoly(t.coeff), u * u + UPoly(t.k));
  }
  return acc;
}

// ---------------------------------------------------------------- closed form

long double ClosedForm::value() const {
  long double v = constant.to_long_double();
  for (const auto& t : arctan) v += t.coeff.to_long_double() * std::atan(t.arg.to_long_double());
  for (const auto& t : log) v += t.coeff.to_long_double() * std::log(t.arg.to_long_double());
  return v;
}

std::string ClosedForm::str() const {
  std::ostringstream os;
  os << "(" << constant.str() << ")";
  for (const auto& t : arctan) os << " + (" << t.coeff.str() << ")*atan(" << t.arg.str() << ")";
  for (const auto& t : log) os << " + (" << t.coeff.str() << ")*log(" << t.arg.str() << ")";
  return os.str();
}

ClosedForm evaluate(const Antiderivative& F, const Rational& lo, const Rational& hi) {
  ClosedForm out;
  out.constant = QuadSurd(F.rational.eval(hi) - F.rational.eval(lo));
  if (lo == hi) return out;
  for (const auto& t : F.logs) {
    Rational a = t.arg.eval(lo), b = t.arg.eval(hi);
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::PoleInInterval, "log argument vanishes at an endpoint");
    Rational ratio = (b / a).abs();
    if (ratio != Rational(1)) out.log.push_back({QuadSurd(t.coeff), QuadSurd(ratio)});
  }
  for (const auto& t : F.quad_bases) {
    QuadSurd ul(lo + t.shift), uh(hi + t.shift);
    if (t.k.sign() > 0) {
      QuadSurd s = QuadSurd::sqrt_of(t.k);
      QuadSurd c = QuadSurd(t.coeff) / s;
      if (!uh.is_zero()) out.arctan.push_back({c, uh / s});
      if (!ul.is_zero()) out.arctan.push_back({-c, ul / s});
    } else {
      QuadSurd s = QuadSurd::sqrt_of(-t.k);
      QuadSurd c = QuadSurd(t.coeff) / (QuadSurd(Rational(2)) * s);
      QuadSurd rh = (uh - s) / (uh + s), rl = (ul - s) / (ul + s);
      QuadSurd ratio = (rh / rl).abs();
      if (!(ratio == QuadSurd(Rational(1)))) out.log.push_back({c, ratio});
    }
  }
  return out;
}

ClosedForm integrate_definite(const RationalFunction& f, const FactorList& factors, const Rational& lo,
                              const Rational& hi) {
  if (lo == hi) return ClosedForm{};
  const Rational& a = lo < hi ? lo : hi;
  const Rational& b = lo < hi ? hi : lo;
  if (f.den().eval(a).is_zero() || f.den().eval(b).is_zero()) {
    throw Error(ErrorKind::PoleInInterval, "denominator vanishes at an endpoint");
  }
  if (f.den().degree() > 0 && sturm_count(f.den(), a, b) > 0) {
    throw Error(ErrorKind::PoleInInterval, "denominator has a root in (" + a.str() + ", " + b.str() + ")");
  }
  ClosedForm cf = evaluate(antiderivative(partial_fractions(f, factors)), lo, hi);
  long double v = cf.value();
  double oracle = quad_oracle(f, lo, hi, 1e-10);
  if (std::fabs(static_cast<double>(v) - oracle) > 1e-9 * std::max(1.0, std::fabs(oracle))) {
    std::ostringstream os;
    os.precision(17);
    os << "closed form " << static_cast<double>(v) << " disagrees with quadrature " << oracle;
    throw Error(ErrorKind::Internal, os.str());
  }
  return cf;
}

ClosedForm integrate_definite(const RationalFunction& f, const Rational& lo, const Rational& hi) {
  if (lo == hi) return ClosedForm{};
  const Rational& a = lo < hi ? lo : hi;
  const Rational& b = lo < hi ? hi : lo;
  if (f.den().eval(a).is_zero() || f.den().eval(b).is_zero()) {
    throw Error(ErrorKind::PoleInInterval, "denominator vanishes at an endpoint");
  }
  if (f.den().degree() > 0 && sturm_count(f.den(), a, b) > 0) {
    throw Error(ErrorKind::PoleInInterval, "denominator has a root in (" + a.str() + ", " + b.str() + ")");
  }
  FactorList factors = f.den().degree() > 0 ? factor_denominator(f.den()) : FactorList{};
  return integrate_definite(f, factors, lo, hi);
}

// ---------------------------------------------------------------- quadrature

namespace {

constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kWg[4] = {0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
                                0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct Segment {
  long double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RationalFunction& f, long double a, long double b) {
  long double c = 0.5L * (a + b), h = 0.5L * (b - a);
  long double fc = f.eval(c);
  long double k = fc * kWgk[7], g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    long double x = h * kXgk[j];
    long double s = f.eval(c - x) + f.eval(c + x);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::fabs((k - g) * h)};
}

}  // namespace

double quad_oracle(const RationalFunction& f, const Rational& lo, const Rational& hi, double tol) {
  if (lo == hi) return 0.0;
  const Rational& a = lo < hi ? lo : hi;
  const Rational& b = lo < hi ? hi : lo;
  if (f.den().eval(a).is_zero() || f.den().eval(b).is_zero() ||
      (f.den().degree() > 0 && sturm_count(f.den(), a, b) > 0)) {
    throw Error(ErrorKind::PoleInInterval, "integrand has a pole in the closed interval");
  }
  constexpr int kMaxSegments = 5000;
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, lo.to_long_double(), hi.to_long_double());
  long double total = first.value, err = first.error;
  heap.push(first);
  for (int n = 1;; ++n) {
    long double floor = 64.0L * std::numeric_limits<double>::epsilon() * std::fabs(total);
    if (err <= tol || err <= floor) break;
    if (n >= kMaxSegments) throw Error(ErrorKind::NonConvergence, "quadrature did not converge");
    Segment s = heap.top();
    heap.pop();
    long double m = 0.5L * (s.a + s.b);
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }
  // Re-sum to drop accumulated update error.
  long double sum = 0.0L;
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  return static_cast<double>(sum);
}

}  // namespace periods::ratint
