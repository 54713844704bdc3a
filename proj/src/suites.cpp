#include "periods/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "periods/montecarlo.hpp"
#include "periods/serialize.hpp"
#include "periods/zeta.hpp"

namespace periods {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < 20) messages.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ledger", "ring",        "zeta",        "ratint",
                                                 "sturm",  "materialize", "determinism", "all"};
  return names;
}

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational small_rational(std::mt19937_64& rng, long span = 9, long max_den = 4) {
  return Rational(uniform(rng, -span, span)) / Rational(uniform(rng, 1, max_den));
}

unsigned sat_add(unsigned a, unsigned b) {
  if (a == DegreeBound::kInfinite || b == DegreeBound::kInfinite) return DegreeBound::kInfinite;
  return a + b;
}

}  // namespace

Expr random_expr(std::mt19937_64& rng, unsigned depth) {
  if (depth == 0 || uniform(rng, 0, 3) == 0) {
    switch (uniform(rng, 0, 9)) {
      case 0: return Expr::builtin("pi");
      case 1: return Expr::builtin("log", {Rational(2)});
      case 2: return Expr::builtin("log", {Rational(uniform(rng, 3, 9)) / Rational(2)});
      case 3: return Expr::builtin("pi_log2");
      case 4: return Expr::builtin("pi_squared");
      case 5: return Expr::builtin("zeta", {Rational(2 * uniform(rng, 1, 2))});
      case 6: return Expr::builtin("sqrt", {Rational(uniform(rng, 1, 12))});
      case 7: return Expr::literal(Rational());
      default: return Expr::literal(small_rational(rng));
    }
  }
  switch (uniform(rng, 0, 5)) {
    case 0: return Expr::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 1:
    case 2: return Expr::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return Expr::neg(random_expr(rng, depth - 1));
    case 4: {
      GaussianRational c{small_rational(rng), uniform(rng, 0, 2) == 0 ? small_rational(rng) : Rational()};
      return Expr::scale(c, random_expr(rng, depth - 1));
    }
    default: return Expr::pow(random_expr(rng, depth - 1), static_cast<unsigned>(uniform(rng, 1, 3)));
  }
}

std::vector<std::pair<std::string, PeriodWitness>> zeta_gallery() {
  return {
      {"0", zero_witness()},
      {"3/2", make_algebraic(Rational(3, 2))},
      {"sqrt(2)", make_sqrt(2)},
      {"pi", builtin("pi")},
      {"log(2)", builtin("log", {Rational(2)})},
      {"log(3)", builtin("log", {Rational(3)})},
      {"pi_log2", builtin("pi_log2")},
      {"pi_squared", builtin("pi_squared")},
      {"zeta(2)", builtin("zeta_even", {Rational(2)})},
      {"zeta(4)", builtin("zeta_even", {Rational(4)})},
      {"scale(0 + 1i, pi)", scale(GaussianRational{Rational(), Rational(1)}, builtin("pi"))},
      {"mul(pi, log(2))", mul(builtin("pi"), builtin("log", {Rational(2)}))},
  };
}

namespace {

UPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long c : ascending) v.emplace_back(c);
  return UPoly(std::move(v));
}

UPoly lin(long root) { return UPoly::linear(Rational(root)); }

}  // namespace

std::vector<RatintCase> ratint_corpus() {
  using ratint::RationalFunction;
  auto q = [](long b, long c) { return poly({c, b, 1}); };
  return {
      {"1/(x-2)", RationalFunction(poly({1}), lin(2)), 0, 1},
      {"1/(x+1)", RationalFunction(poly({1}), lin(-1)), 0, 1},
      {"(3x+1)/((x-2)(x+3))", RationalFunction(poly({1, 3}), lin(2) * lin(-3)), 0, 1},
      {"1/(x(x-3))", RationalFunction(poly({1}), lin(0) * lin(3)), 1, 2},
      {"(x^2+1)/((x-5)(x+4))", RationalFunction(poly({1, 0, 1}), lin(5) * lin(-4)), 0, 1},
      {"1/(x-2)^2", RationalFunction(poly({1}), lin(2).pow(2)), 0, 1},
      {"x/(x+1)^3", RationalFunction(poly({0, 1}), lin(-1).pow(3)), 0, 2},
      {"1/((x-3)^2(x+2))", RationalFunction(poly({1}), lin(3).pow(2) * lin(-2)), -1, 2},
      {"1/(x^2+1)", RationalFunction(poly({1}), q(0, 1)), 0, 1},
      {"(x+1)/(x^2+1)", RationalFunction(poly({1, 1}), q(0, 1)), 0, 1},
      {"(2x+3)/(x^2+2x+5)", RationalFunction(poly({3, 2}), q(2, 5)), -1, 3},
      {"1/(x^2+x+1)", RationalFunction(poly({1}), q(1, 1)), 0, 2},
      {"x^3/(x^2+3)", RationalFunction(poly({0, 0, 0, 1}), q(0, 3)), 0, 1},
      {"1/(x^2-2)", RationalFunction(poly({1}), q(0, -2)), -1, 1},
      {"1/(x^2+1)^2", RationalFunction(poly({1}), q(0, 1).pow(2)), 0, 1},
      {"1/(x^2+1)^3", RationalFunction(poly({1}), q(0, 1).pow(3)), 0, 1},
      {"(x+2)/(x^2+2x+2)^2", RationalFunction(poly({2, 1}), q(2, 2).pow(2)), -1, 1},
      {"(3x-1)/(x^2+x+1)^3", RationalFunction(poly({-1, 3}), q(1, 1).pow(3)), 0, 2},
      {"1/((x^2+1)^2(x-2))", RationalFunction(poly({1}), q(0, 1).pow(2) * lin(2)), 0, 1},
      {"x^5/(x^2+4)^3", RationalFunction(poly({0, 0, 0, 0, 0, 1}), q(0, 4).pow(3)), 0, 3},
  };
}

std::pair<ratint::FactorList, UPoly> random_partial_fraction_case(std::mt19937_64& rng, int max_degree) {
  ratint::FactorList f;
  int degree = 0;
  int target = static_cast<int>(uniform(rng, 1, max_degree));
  while (degree < target) {
    int room = target - degree;
    if (room >= 2 && uniform(rng, 0, 1) == 0) {
      Rational b = small_rational(rng, 4, 2);
      Rational c = b * b / Rational(4) + Rational(uniform(rng, 1, 9)) / Rational(uniform(rng, 1, 3));
      bool dup = std::any_of(f.quadratic.begin(), f.quadratic.end(),
                             [&](const auto& x) { return x.b == b && x.c == c; });
      if (dup) continue;
      unsigned m = static_cast<unsigned>(uniform(rng, 1, std::min(3, room / 2)));
      f.quadratic.push_back({b, c, m});
      degree += 2 * static_cast<int>(m);
    } else {
      Rational r = small_rational(rng, 6, 3);
      bool dup = std::any_of(f.linear.begin(), f.linear.end(), [&](const auto& x) { return x.root == r; });
      if (dup) continue;
      unsigned m = static_cast<unsigned>(uniform(rng, 1, std::min(3, room)));
      f.linear.push_back({r, m});
      degree += static_cast<int>(m);
    }
  }
  std::vector<Rational> num(static_cast<std::size_t>(degree + uniform(rng, -1, 2)));
  for (auto& c : num) c = small_rational(rng, 9, 5);
  if (num.empty()) num.push_back(Rational(1));
  return {f, UPoly(std::move(num))};
}

namespace {

// ---------------------------------------------------------------- ledger

PeriodWitness checked_witness(const Expr& e, SuiteResult& r) {
  auto label = [&] { return print_expr(e); };
  PeriodWitness w;
  switch (e.kind) {
    case Expr::Kind::Builtin:
    case Expr::Kind::Literal:
      w = to_witness(e);
      break;
    case Expr::Kind::Add: {
      PeriodWitness a = checked_witness(e.args[0], r), b = checked_witness(e.args[1], r);
      w = add(a, b);
      r.check(w.bound().value <= std::max(a.bound().value, b.bound().value), "add exceeds max: " + label());
      break;
    }
    case Expr::Kind::Mul: {
      PeriodWitness a = checked_witness(e.args[0], r), b = checked_witness(e.args[1], r);
      w = mul(a, b);
      r.check(w.bound().value <= sat_add(a.bound().value, b.bound().value), "mul exceeds sum: " + label());
      break;
    }
    case Expr::Kind::Neg: {
      PeriodWitness a = checked_witness(e.args[0], r);
      w = negate(a);
      r.check(w.bound() == a.bound(), "neg changed ledger: " + label());
      break;
    }
    case Expr::Kind::Scale: {
      PeriodWitness a = checked_witness(e.args[0], r);
      w = e.value.im.is_zero() ? scale(e.value.re, a) : scale(e.value, a);
      bool zero = e.value.re.is_zero() && e.value.im.is_zero();
      unsigned expect = zero || a.is_zero() ? 0 : a.bound().value;
      r.check(w.bound().value == expect, "scale changed ledger: " + label());
      break;
    }
    case Expr::Kind::Pow: {
      PeriodWitness a = checked_witness(e.args[0], r);
      w = power(a, e.exponent);
      unsigned cap = a.bound().value == DegreeBound::kInfinite ? DegreeBound::kInfinite : a.bound().value * e.exponent;
      r.check(w.bound().value <= cap, "pow exceeds m*b1: " + label());
      break;
    }
  }
  if (w.is_zero()) r.check(w.bound().value == 0, "zero witness with nonzero ledger: " + label());
  if (w.algebraic().algebraic && w.algebraic().known_nonzero) {
    r.check(w.bound().value == 1, "nonzero algebraic without ledger 1: " + label());
  }
  if (w.bound().value == 1) r.check(w.algebraic().algebraic, "ledger 1 on a non-algebraic witness: " + label());
  return w;
}

SuiteResult ledger_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "ledger";
  std::mt19937_64 rng(seed);
  for (int done = 0; done < 1000;) {
    Expr e = random_expr(rng, 3);
    try {
      PeriodWitness w = checked_witness(e, r);
      PeriodWitness other = to_witness(random_expr(rng, 2));
      r.check(distance_bound(w, other) == distance_bound(other, w), "distance_bound asymmetric: " + print_expr(e));
      std::vector<unsigned> b = power_bounds(w, 32);
      for (unsigned m = 1; m <= 32; ++m) {
        if (w.bound().value == DegreeBound::kInfinite) break;
        r.check(b[m] <= m * b[1], "power_bound exceeds m*b1: " + print_expr(e));
      }
      ++done;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::TooLarge) r.check(false, print_expr(e) + ": " + err.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------- ring

SuiteResult ring_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "ring";
  constexpr std::uint64_t kN = 200000;
  std::vector<std::pair<std::string, PeriodWitness>> g = {
      {"pi", builtin("pi")},
      {"log(2)", builtin("log", {Rational(2)})},
      {"sqrt(2)", make_sqrt(2)},
      {"-3/2", make_algebraic(Rational(-3, 2))},
      {"pi_log2", builtin("pi_log2")},
  };
  std::vector<ComplexEstimate> est;
  for (std::size_t i = 0; i < g.size(); ++i) est.push_back(evaluate_witness(g[i].second, kN, seed + 1 + i));
  std::uint64_t s = seed + 100;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      const auto& a = est[i].re;
      const auto& b = est[j].re;
      ComplexEstimate p = evaluate_witness(mul(g[i].second, g[j].second), kN, s++);
      double sp = std::sqrt(std::pow(b.mean * a.std_error, 2) + std::pow(a.mean * b.std_error, 2) +
                            std::pow(p.re.std_error, 2));
      r.check(std::fabs(p.re.mean - a.mean * b.mean) <= 3.0 * sp + 1e-12,
              "mul(" + g[i].first + ", " + g[j].first + ") off by " + decimal_string(p.re.mean - a.mean * b.mean));
      ComplexEstimate q = evaluate_witness(add(g[i].second, g[j].second), kN, s++);
      double sq = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error + q.re.std_error * q.re.std_error);
      r.check(std::fabs(q.re.mean - (a.mean + b.mean)) <= 3.0 * sq + 1e-12,
              "add(" + g[i].first + ", " + g[j].first + ") off by " + decimal_string(q.re.mean - a.mean - b.mean));
    }
  }
  return r;
}

// ---------------------------------------------------------------- zeta

SuiteResult zeta_suite(std::uint64_t) {
  SuiteResult r;
  r.name = "zeta";
  constexpr double kSlack = 1.0 + 1e-10;
  auto g = zeta_gallery();
  for (int ti = 1; ti <= 9; ++ti) {
    double t = ti / 10.0;
    std::vector<double> z;
    for (const auto& [name, w] : g) {
      z.push_back(zeta_truncated(w, t, 32).series_value);
      r.check(z.back() <= zeta_upper_bound(w, t) * kSlack, "closed-form bound fails for " + name);
      r.check(zeta_truncated(w, t, 31).series_value <= z.back(), "truncation not monotone for " + name);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        std::string pair = g[i].first + ", " + g[j].first + " at t=" + decimal_string(t);
        double zp = zeta_truncated(mul(g[i].second, g[j].second), t, 32).series_value;
        r.check(zp <= z[i] * z[j] * kSlack, "product bound fails for " + pair);
        double zs = zeta_truncated(add(g[i].second, g[j].second), t, 32).series_value;
        r.check(zs <= zeta_sum_bound(g[i].second, g[j].second, t) * kSlack, "sum bound fails for " + pair);
      }
    }
  }
  double alg = zeta_truncated(make_algebraic(Rational(2)), 0.5, 40).series_value;
  r.check(alg >= 1.999999 && alg <= 2.000001, "algebraic zeta at 1/2 is " + decimal_string(alg));
  r.check(zeta_truncated(zero_witness(), 0.7, 32).series_value == 1.0, "zero witness zeta is not 1");
  return r;
}

// ---------------------------------------------------------------- ratint

SuiteResult ratint_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "ratint";
  for (const auto& c : ratint_corpus()) {
    try {
      ratint::ClosedForm cf = ratint::integrate_definite(c.f, c.lo, c.hi);
      double oracle = ratint::quad_oracle(c.f, c.lo, c.hi, 1e-10);
      double v = static_cast<double>(cf.value());
      r.check(std::fabs(v - oracle) <= 1e-9, c.label + ": closed form " + decimal_string(v) + " vs " +
                                                 decimal_string(oracle));
    } catch (const Error& e) {
      r.check(false, c.label + ": " + e.what());
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    auto [factors, num] = random_partial_fraction_case(rng, 8);
    ratint::RationalFunction f(num, factors.expand());
    try {
      ratint::PartialFractions pf = ratint::partial_fractions(f, factors);
      r.check(pf.recombine().equals(f), "recombination mismatch for (" + num.str() + ")/(" + f.den().str() + ")");
      r.check(ratint::antiderivative(pf).derivative().equals(f),
              "antiderivative derivative mismatch for (" + num.str() + ")/(" + f.den().str() + ")");
    } catch (const Error& e) {
      r.check(false, std::string("partial fractions: ") + e.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------- sturm

unsigned scan_sign_changes(const UPoly& p, long double lo, long double hi, std::size_t points) {
  unsigned changes = 0;
  int prev = 0;
  for (std::size_t i = 0; i <= points; ++i) {
    long double x = lo + (hi - lo) * static_cast<long double>(i) / static_cast<long double>(points);
    long double v = p.eval(x);
    int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

SuiteResult sturm_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "sturm";
  std::mt19937_64 rng(seed ^ 0x5157u);
  for (int done = 0; done < 200;) {
    int deg = static_cast<int>(uniform(rng, 1, 6));
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = Rational(uniform(rng, -9, 9));
    if (c.back().is_zero()) continue;
    UPoly p(c);
    if (gcd(p, p.derivative()).degree() > 0) continue;
    Rational lo = Rational(uniform(rng, -40, 20)) / Rational(8);
    Rational hi = lo + Rational(uniform(rng, 1, 40)) / Rational(8);
    if (p.eval(lo).is_zero() || p.eval(hi).is_zero()) continue;
    unsigned sturm = ratint::sturm_count(p, lo, hi);
    unsigned scan = scan_sign_changes(p, lo.to_long_double(), hi.to_long_double(), 10000);
    if (scan != sturm) scan = scan_sign_changes(p, lo.to_long_double(), hi.to_long_double(), 2000000);
    r.check(scan == sturm, p.str() + " on (" + lo.str() + ", " + hi.str() + "): sturm " + std::to_string(sturm) +
                               ", scan " + std::to_string(scan));
    ++done;
  }
  return r;
}

// ---------------------------------------------------------------- materialize

SuiteResult materialize_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "materialize";
  constexpr std::uint64_t kN = 1000000;
  std::vector<std::pair<std::string, std::vector<PeriodWitness>>> cases = {
      {"{pi, log(2)}", {builtin("pi"), builtin("log", {Rational(2)})}},
      {"{pi, pi}", {builtin("pi"), builtin("pi")}},
      {"{pi, 1}", {builtin("pi"), make_algebraic(Rational(1))}},
  };
  for (const auto& [name, ws] : cases) {
    Domain d;
    for (const auto& w : ws) d.append(w.re_pos());
    Domain m = materialize_single_domain(d);
    r.check(boxes_pairwise_disjoint(m), name + ": boxes overlap");
    bool same_dim = std::all_of(m.cells().begin(), m.cells().end(),
                                [&](const Cell& c) { return c.dim() == m.max_dim(); });
    r.check(same_dim, name + ": mixed dimensions after materialize");
    VolumeEstimate a = estimate(d, kN, seed);
    VolumeEstimate b = estimate(m, kN, seed + 1);
    double s = std::hypot(a.std_error, b.std_error);
    r.check(std::fabs(a.mean - b.mean) <= 3.0 * s + 1e-12, name + ": volume changed by " + decimal_string(b.mean - a.mean));
  }
  return r;
}

// ---------------------------------------------------------------- determinism

SuiteResult determinism_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "determinism";
  PeriodWitness w = mul(builtin("pi"), builtin("log", {Rational(2)}));
  SamplingOptions one{1u << 16, 1}, many{1u << 16, 4};
  std::string a = to_json(evaluate_witness(w, 300000, seed, one)).dump();
  std::string b = to_json(evaluate_witness(w, 300000, seed, many)).dump();
  std::string c = to_json(evaluate_witness(w, 300000, seed, many)).dump();
  r.check(a == b, "result depends on worker count");
  r.check(b == c, "repeated runs differ");
  return r;
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed) {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(std::uint64_t)>>> table = {
      {"ledger", ledger_suite},     {"ring", ring_suite},
      {"zeta", zeta_suite},         {"ratint", ratint_suite},
      {"sturm", sturm_suite},       {"materialize", materialize_suite},
      {"determinism", determinism_suite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : table) {
    if (name == "all" || name == n) out.push_back(fn(seed));
  }
  if (out.empty()) throw Error(ErrorKind::UnknownName, "unknown suite '" + name + "'");
  return out;
}

}  // namespace periods
