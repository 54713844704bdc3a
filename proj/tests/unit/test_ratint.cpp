#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "periods/ratint.hpp"
#include "periods/suites.hpp"

using namespace periods;
using namespace periods::ratint;

namespace {

UPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long c : ascending) v.emplace_back(c);
  return UPoly(std::move(v));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(poly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(poly({1, 0, 1}), Rational(-10), Rational(10)) == 0);
  UPoly cubic = poly({-1, 1}) * poly({-2, 1}) * poly({-3, 1});
  CHECK(sturm_count(cubic, Rational(0), Rational(5, 2)) == 2);
  CHECK(sturm_count(cubic.pow(2), Rational(0), Rational(5, 2)) == 2);  // distinct roots
  CHECK(kind_of([] { sturm_count(UPoly(), Rational(0), Rational(1)); }) == ErrorKind::ZeroPolynomial);
  CHECK(kind_of([&] { sturm_count(cubic, Rational(1), Rational(4)); }) == ErrorKind::EndpointRoot);
}

TEST_CASE("factor_denominator examples") {
  FactorList f = factor_denominator(poly({0, -1, 0, 1}));
  REQUIRE(f.linear.size() == 3);
  CHECK(f.linear[0].root == Rational(-1));
  CHECK(f.linear[1].root == Rational(0));
  CHECK(f.linear[2].root == Rational(1));
  CHECK(f.quadratic.empty());

  FactorList q = factor_denominator(poly({1, 0, 2, 0, 1}));
  REQUIRE(q.quadratic.size() == 1);
  CHECK(q.quadratic[0].b == Rational(0));
  CHECK(q.quadratic[0].c == Rational(1));
  CHECK(q.quadratic[0].multiplicity == 2);
  CHECK(q.expand() == poly({1, 0, 2, 0, 1}));

  CHECK(kind_of([] { factor_denominator(poly({-2, 0, 0, 1})); }) == ErrorKind::Unfactorable);
}

TEST_CASE("factoring handles rational roots, scaling and quadratic pairs") {
  UPoly p = poly({-1, 2}).pow(2) * poly({3, 1}) * poly({2, 0, 1}) * poly({1, 1, 1}) * Rational(6);
  FactorList f = factor_denominator(p);
  CHECK(f.expand() == p.monic());
  CHECK(f.linear.size() == 2);
  CHECK(f.quadratic.size() == 2);
  // Positive non-square discriminant stays quadratic.
  FactorList s = factor_denominator(poly({-2, 0, 1}) * poly({-3, 0, 1}));
  CHECK(s.quadratic.size() == 2);
  CHECK(s.linear.empty());
}

TEST_CASE("partial_fractions examples") {
  RationalFunction f(poly({1, 1}), poly({0, 1}) * poly({1, 0, 1}));
  PartialFractions pf = partial_fractions(f, factor_denominator(f.den()));
  REQUIRE(pf.linear.size() == 1);
  CHECK(pf.linear[0].a == Rational(1));
  REQUIRE(pf.quadratic.size() == 1);
  CHECK(pf.quadratic[0].b == Rational(-1));
  CHECK(pf.quadratic[0].c == Rational(1));
  CHECK(pf.recombine().equals(f));

  RationalFunction g(poly({1}), poly({-1, 1}).pow(2));
  PartialFractions pg = partial_fractions(g, factor_denominator(g.den()));
  REQUIRE(pg.linear.size() == 1);
  CHECK(pg.linear[0].power == 2);
  CHECK(pg.linear[0].a == Rational(1));

  RationalFunction h(poly({0, 0, 1}), poly({1, 0, 1}));
  PartialFractions ph = partial_fractions(h, factor_denominator(h.den()));
  CHECK(ph.polynomial_part == poly({1}));
  REQUIRE(ph.quadratic.size() == 1);
  CHECK(ph.quadratic[0].b == Rational(0));
  CHECK(ph.quadratic[0].c == Rational(-1));
}

TEST_CASE("inconsistent factorization is rejected") {
  RationalFunction f(poly({1}), poly({-1, 1}) * poly({-2, 1}));
  FactorList wrong;
  wrong.linear.push_back({Rational(1), 2});
  CHECK(kind_of([&] { partial_fractions(f, wrong); }) == ErrorKind::InconsistentFactorization);
  FactorList reducible;
  reducible.quadratic.push_back({Rational(-3), Rational(2), 1});
  CHECK(kind_of([&] { partial_fractions(f, reducible); }) == ErrorKind::InconsistentFactorization);
}

TEST_CASE("recombination and derivative checks on random cases") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto [factors, num] = random_partial_fraction_case(rng, 8);
    RationalFunction f(num, factors.expand());
    PartialFractions pf = partial_fractions(f, factors);
    REQUIRE(pf.recombine().equals(f));
    REQUIRE(antiderivative(pf).derivative().equals(f));
  }
}

TEST_CASE("integrate_definite examples") {
  ClosedForm a = integrate_definite(RationalFunction(poly({1}), poly({1, 0, 1})), Rational(0), Rational(1));
  CHECK_FALSE(a.arctan.empty());
  CHECK(static_cast<double>(a.value()) == doctest::Approx(M_PI / 4).epsilon(1e-14));
  ClosedForm b = integrate_definite(RationalFunction(poly({1, 1}), poly({1, 0, 1})), Rational(0), Rational(1));
  CHECK(static_cast<double>(b.value()) == doctest::Approx(M_PI / 4 + std::log(2.0) / 2).epsilon(1e-14));
  ClosedForm c = integrate_definite(RationalFunction(poly({1}), poly({1, 0, 1}).pow(2)), Rational(0), Rational(1));
  CHECK(c.constant == QuadSurd(Rational(1, 4)));
  CHECK(static_cast<double>(c.value()) == doctest::Approx(M_PI / 8 + 0.25).epsilon(1e-14));
  ClosedForm d = integrate_definite(RationalFunction(poly({1}), poly({-2, 1})), Rational(0), Rational(1));
  REQUIRE(d.log.size() == 1);
  CHECK(d.log[0].arg == QuadSurd(Rational(1, 2)));
  CHECK(static_cast<double>(d.value()) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("closed forms carry surds for irrational radicands") {
  // 1/(x^2 + 2) on [0, 1]: atan(1/sqrt 2)/sqrt 2
  ClosedForm f = integrate_definite(RationalFunction(poly({1}), poly({2, 0, 1})), Rational(0), Rational(1));
  REQUIRE(f.arctan.size() == 1);
  CHECK(f.arctan[0].coeff.radicand() == 2);
  CHECK(static_cast<double>(f.value()) == doctest::Approx(std::atan(1 / std::sqrt(2.0)) / std::sqrt(2.0)));
  // 1/(x^2 - 2) on [-1, 1]: log((2 - sqrt 2)/(2 + sqrt 2))/(2 sqrt 2) ... times 2 by symmetry
  ClosedForm g = integrate_definite(RationalFunction(poly({1}), poly({-2, 0, 1})), Rational(-1), Rational(1));
  double s = std::sqrt(2.0);
  CHECK(static_cast<double>(g.value()) == doctest::Approx(std::log((s - 1) / (s + 1)) / s).epsilon(1e-12));
}

TEST_CASE("integration errors") {
  RationalFunction f(poly({1}), poly({-1, 2}));
  CHECK(kind_of([&] { integrate_definite(f, Rational(0), Rational(1)); }) == ErrorKind::PoleInInterval);
  CHECK(kind_of([&] { integrate_definite(f, Rational(1, 2), Rational(1)); }) == ErrorKind::PoleInInterval);
  RationalFunction g(poly({1}), poly({-2, 0, 0, 1}));
  CHECK(kind_of([&] { integrate_definite(g, Rational(2), Rational(3)); }) == ErrorKind::Unfactorable);
  CHECK(kind_of([] { RationalFunction(poly({1}), UPoly()); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("integration with a caller-supplied factorization") {
  // x^6/(x^2+1) = x^4 - x^2 + 1 - 1/(x^2+1)
  RationalFunction f(poly({0, 0, 0, 0, 0, 0, 1}), poly({1, 0, 1}));
  FactorList given;
  given.quadratic.push_back({Rational(0), Rational(1), 1});
  ClosedForm c = integrate_definite(f, given, Rational(0), Rational(1));
  CHECK(static_cast<double>(c.value()) == doctest::Approx(1.0 / 5 - 1.0 / 3 + 1 - M_PI / 4).epsilon(1e-13));
}

TEST_CASE("quad_oracle examples") {
  CHECK(quad_oracle(RationalFunction(poly({1}), poly({1, 0, 1})), Rational(0), Rational(1), 1e-10) ==
        doctest::Approx(0.7853981634).epsilon(1e-10));
  CHECK(quad_oracle(RationalFunction(poly({0, 1}), poly({1})), Rational(0), Rational(1)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(quad_oracle(RationalFunction(poly({1}), poly({0, 1})), Rational(3), Rational(3)) == 0.0);
  CHECK(kind_of([] { quad_oracle(RationalFunction(poly({1}), poly({0, 1})), Rational(-1), Rational(1)); }) ==
        ErrorKind::PoleInInterval);
}

TEST_CASE("the integration corpus agrees with quadrature") {
  auto corpus = ratint_corpus();
  CHECK(corpus.size() == 20);
  for (const auto& c : corpus) {
    ClosedForm cf = integrate_definite(c.f, c.lo, c.hi);
    INFO(c.label);
    CHECK(std::fabs(static_cast<double>(cf.value()) - quad_oracle(c.f, c.lo, c.hi, 1e-10)) <= 1e-9);
    for (const auto& t : cf.log) CHECK(t.arg.sign() > 0);
  }
}

TEST_CASE("reversed limits negate the integral") {
  RationalFunction f(poly({1, 1}), poly({1, 1, 1}));
  double a = static_cast<double>(integrate_definite(f, Rational(0), Rational(2)).value());
  double b = static_cast<double>(integrate_definite(f, Rational(2), Rational(0)).value());
  CHECK(a == doctest::Approx(-b).epsilon(1e-14));
}
