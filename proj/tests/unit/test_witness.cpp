#include <doctest.h>

#include <cmath>
#include <random>

#include "periods/montecarlo.hpp"
#include "periods/witness.hpp"

using namespace periods;

namespace {

constexpr std::uint64_t kN = 400000;
const GaussianRational kI{Rational(), Rational(1)};

ComplexEstimate mc(const PeriodWitness& w, std::uint64_t seed = 1) { return evaluate_witness(w, kN, seed); }

bool near(const SignedEstimate& e, double target, double extra = 0.0) {
  return std::fabs(e.mean - target) <= 3.0 * std::hypot(e.std_error, extra) + 1e-12;
}

PeriodWitness pi() { return builtin("pi"); }
PeriodWitness log_of(long q) { return builtin("log", {Rational(q)}); }

}  // namespace

TEST_CASE("make_algebraic") {
  PeriodWitness w = make_algebraic(Rational(3, 2));
  CHECK(w.bound().value == 1);
  CHECK(w.re_pos().size() == 1);
  CHECK(near(mc(w).re, 1.5));
  PeriodWitness z = make_algebraic(Rational(0));
  CHECK(z.is_zero());
  CHECK(z.bound().value == 0);
  PeriodWitness n = make_algebraic(Rational(-2));
  CHECK(n.re_pos().empty());
  REQUIRE(n.re_neg().size() == 1);
  CHECK(n.re_neg().cells()[0].box()[0].hi == Rational(2));
  CHECK(n.bound().value == 1);
  CHECK(near(mc(n).re, -2.0));
}

TEST_CASE("make_sqrt") {
  CHECK(near(mc(make_sqrt(2)).re, std::sqrt(2.0)));
  CHECK(near(mc(make_sqrt(1)).re, 1.0));
  CHECK(near(mc(make_sqrt(4)).re, 2.0));
  CHECK(make_sqrt(2).bound().value == 1);
  CHECK(make_sqrt(2).algebraic().algebraic);
}

TEST_CASE("builtins and their bounds") {
  CHECK(pi().bound().value == 2);
  CHECK(log_of(2).bound().value == 2);
  CHECK(builtin("pi_log2").bound().value == 3);
  CHECK(builtin("pi_squared").bound().value == 3);
  CHECK(builtin("zeta_even", {Rational(2)}).bound().value == 3);
  CHECK(near(mc(pi()).re, M_PI));
  CHECK(near(mc(builtin("pi_squared")).re, M_PI * M_PI));
  CHECK(near(mc(builtin("zeta_even", {Rational(2)})).re, M_PI * M_PI / 6.0));
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK_THROWS_AS(builtin("log", {Rational(1, 2)}), Error);
  CHECK_THROWS_AS(builtin("log", {Rational(1)}), Error);
  CHECK_THROWS_AS(builtin("zeta_even", {Rational(3)}), Error);
}

TEST_CASE("registry contents") {
  const Registry& r = default_registry();
  CHECK(r.bound_for(Signature::atom("pi") * Signature::atom("log(2)")) == 3u);
  CHECK(r.bound_for(Signature::atom("pi").pow(2)) == 3u);
  CHECK(r.bound_for(Signature::atom("pi").pow(2).scaled({Rational(1, 6), Rational()})) == 3u);
  CHECK_FALSE(r.bound_for(Signature::atom("pi") + Signature::atom("log(2)")).has_value());
}

TEST_CASE("mul examples") {
  PeriodWitness m = mul(pi(), log_of(2));
  CHECK(m.bound().value == 3);
  CHECK(m.bound().provenance == Provenance::Registry);
  CHECK(near(mc(m).re, M_PI * std::log(2.0)));
  PeriodWitness z = mul(pi(), make_algebraic(Rational(0)));
  CHECK(z.is_zero());
  CHECK(z.bound().value == 0);
  PeriodWitness two_pi = mul(make_algebraic(Rational(2)), pi());
  CHECK(two_pi.bound().value == 2);
  CHECK(near(mc(two_pi).re, 2.0 * M_PI));
}

TEST_CASE("complex multiplication follows the sign rules") {
  PeriodWitness a = add(pi(), scale(kI, make_algebraic(Rational(-1))));  // pi - i
  PeriodWitness b = add(make_algebraic(Rational(2)), scale(kI, log_of(2)));  // 2 + i log 2
  ComplexEstimate e = mc(mul(a, b), 5);
  double l2 = std::log(2.0);
  CHECK(near(e.re, 2.0 * M_PI + l2));
  CHECK(near(e.im, M_PI * l2 - 2.0));
}

TEST_CASE("add examples") {
  PeriodWitness s = add(pi(), make_algebraic(Rational(1)));
  CHECK(s.bound().value == 2);
  CHECK(near(mc(s).re, M_PI + 1.0));
  PeriodWitness c = add(pi(), negate(pi()));
  CHECK(c.bound().value == 2);
  CHECK(std::fabs(mc(c).re.mean) <= 3.0 * mc(c).re.std_error);
  PeriodWitness l = add(log_of(2), log_of(3));
  CHECK(l.bound().value == 2);
  CHECK(near(mc(l).re, std::log(6.0)));
}

TEST_CASE("negate") {
  PeriodWitness n = negate(pi());
  CHECK(n.bound().value == 2);
  CHECK(near(mc(n).re, -M_PI));
  CHECK(negate(zero_witness()).is_zero());
  PeriodWitness w = mul(pi(), log_of(3));
  CHECK(negate(negate(w)).re_pos() == w.re_pos());
  CHECK(negate(negate(w)).re_neg() == w.re_neg());
  CHECK(negate(negate(w)).bound() == w.bound());
}

TEST_CASE("scale examples") {
  PeriodWitness z2 = scale(Rational(1, 6), builtin("pi_squared"));
  CHECK(z2.bound().value == 3);
  CHECK(near(mc(z2).re, M_PI * M_PI / 6.0));
  CHECK(scale(Rational(0), pi()).is_zero());
  CHECK(scale(Rational(0), pi()).bound().value == 0);
  PeriodWitness ip = scale(kI, pi());
  CHECK(ip.bound().value == 2);
  ComplexEstimate e = mc(ip);
  CHECK(std::fabs(e.re.mean) <= 1e-12);
  CHECK(near(e.im, M_PI));
}

TEST_CASE("scale keeps the ledger and scales the value") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  PeriodWitness base = log_of(3);
  ComplexEstimate b = evaluate_witness(base, 100000, 77);
  int within = 0;
  for (int i = 0; i < 100; ++i) {
    Rational q = Rational(num(rng)) / Rational(den(rng));
    if (q.is_zero()) q = Rational(1, 3);
    PeriodWitness s = scale(q, base);
    REQUIRE(s.bound() == base.bound());
    ComplexEstimate e = evaluate_witness(s, 100000, 1000 + static_cast<std::uint64_t>(i));
    double target = q.to_double() * std::log(3.0);
    double sigma = std::hypot(e.re.std_error, std::fabs(q.to_double()) * b.re.std_error);
    if (std::fabs(e.re.mean - target) <= 3.0 * sigma) ++within;
  }
  // 3 sigma: expect ~99.7 of 100; allow binomial slack.
  CHECK(within >= 97);
}

TEST_CASE("power_bound examples") {
  CHECK(power_bound(pi(), 1) == 2);
  CHECK(power_bound(pi(), 2) == 3);
  CHECK(power_bound(pi(), 4) == 6);
  std::vector<unsigned> b = power_bounds(pi(), 6);
  CHECK(b == std::vector<unsigned>{0, 2, 3, 5, 6, 8, 9});
  for (const auto& name : {"pi", "pi_log2", "pi_squared"}) {
    PeriodWitness w = builtin(name);
    std::vector<unsigned> t = power_bounds(w, 32);
    for (unsigned m = 1; m <= 32; ++m) REQUIRE(t[m] <= m * t[1]);
  }
}

TEST_CASE("power builds a witness with the tabulated bound") {
  PeriodWitness p2 = power(pi(), 2);
  CHECK(p2.bound().value == 3);
  CHECK(near(mc(p2).re, M_PI * M_PI));
  PeriodWitness p4 = power(pi(), 4);
  CHECK(p4.bound().value == 6);
  CHECK(p4.max_dim() == 6);
  PeriodWitness p3 = power(log_of(2), 3);
  CHECK(near(evaluate_witness(p3, 1000000, 2).re, std::pow(std::log(2.0), 3)));
}

TEST_CASE("distance_bound") {
  CHECK(distance_bound(pi(), pi()) == 2);
  CHECK(distance_bound(pi(), make_algebraic(Rational(1))) == 2);
  CHECK(distance_bound(make_algebraic(Rational(2)), make_algebraic(Rational(3))) == 1);
  std::vector<PeriodWitness> g = {pi(), log_of(2), builtin("pi_log2"), builtin("pi_squared"), make_sqrt(2),
                                  make_algebraic(Rational(5, 3))};
  for (const auto& a : g) {
    for (const auto& b : g) {
      REQUIRE(distance_bound(a, b) == distance_bound(b, a));
      for (const auto& c : g) {
        // a - b = (a - c) + (c - b): the composed witness bounds the distance.
        PeriodWitness composed = add(add(a, negate(c)), add(c, negate(b)));
        REQUIRE(distance_bound(a, b) <= std::max(composed.bound().value,
                                                 std::max(distance_bound(a, c), distance_bound(c, b))));
      }
    }
  }
}

TEST_CASE("transcendence_report") {
  TranscendenceReport r = transcendence_report(pi(), builtin("pi_log2"), std::make_pair(2u, 3u));
  CHECK(r.summary == "sum and quotient transcendental; linearly independent");
  CHECK_FALSE(r.conditional);
  TranscendenceReport same = transcendence_report(pi(), log_of(2), std::make_pair(2u, 2u));
  CHECK(same.summary.find("no conclusion") != std::string::npos);
  TranscendenceReport cond = transcendence_report(pi(), builtin("pi_log2"));
  CHECK(cond.conditional);
  CHECK(cond.bound1 == 2);
  CHECK(cond.bound2 == 3);
  CHECK(cond.e_plus_pi_note.find("e + pi") != std::string::npos);
}

TEST_CASE("ledger is at least the cell dimension without overrides") {
  PeriodWitness w = add(mul(pi(), log_of(3)), log_of(2));
  CHECK(w.bound().value >= w.max_dim());
  CHECK(w.bound().provenance != Provenance::Registry);
}
