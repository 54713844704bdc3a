#include <doctest.h>

#include <cmath>

#include "periods/zeta.hpp"

using namespace periods;

TEST_CASE("zeta of an algebraic number") {
  ZetaEvaluation z = zeta_truncated(make_algebraic(Rational(2)), 0.5, 40);
  CHECK(z.series_value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(z.power_bounds.size() == 40);
  CHECK(z.power_bounds.front() == 1);
  CHECK(zeta_truncated(zero_witness(), 0.3).series_value == 1.0);
  CHECK(zeta_truncated(zero_witness(), 0.9).series_value == 1.0);
}

TEST_CASE("zeta of pi uses the power bounds") {
  ZetaEvaluation z = zeta_truncated(builtin("pi"), 0.5, 32);
  std::vector<unsigned> head(z.power_bounds.begin(), z.power_bounds.begin() + 6);
  CHECK(head == std::vector<unsigned>{2, 3, 5, 6, 8, 9});
  // Independent sum over the same bounds.
  double s = 0.0;
  for (unsigned m = 1; m <= 32; ++m) s += std::pow(0.5, m) * z.power_bounds[m - 1] / m;
  CHECK(z.series_value == doctest::Approx(std::exp(s)).epsilon(1e-14));
  CHECK(z.series_value <= std::exp(2.0));
  CHECK(z.closed_bound == doctest::Approx(std::exp(2.0)));
  CHECK(z.tail_bound == doctest::Approx(std::pow(0.5, 33) * 2 / 0.5));
}

TEST_CASE("closed forms and bounds") {
  CHECK(zeta_closed_algebraic(0.5) == 2.0);
  CHECK(zeta_closed_algebraic(0.0) == 1.0);
  CHECK(zeta_closed_algebraic(0.9) == doctest::Approx(10.0));
  CHECK(zeta_upper_bound(builtin("pi"), 0.5) == doctest::Approx(7.389056).epsilon(1e-6));
  CHECK(zeta_upper_bound(make_algebraic(Rational(3)), 0.5) == doctest::Approx(2.718282).epsilon(1e-6));
  CHECK(zeta_upper_bound(builtin("pi_squared"), 0.0) == 1.0);
  PeriodWitness l2 = builtin("log", {Rational(2)});
  CHECK(zeta_sum_bound(builtin("pi"), l2, 0.5) == doctest::Approx(7.389056).epsilon(1e-6));
  CHECK(zeta_sum_bound(make_algebraic(Rational(1)), builtin("pi"), 0.5) == doctest::Approx(7.389056).epsilon(1e-6));
  CHECK(zeta_sum_bound(l2, l2, 0.0) == 1.0);
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(zeta_closed_algebraic(1.0), Error);
  CHECK_THROWS_AS(zeta_closed_algebraic(-0.1), Error);
  CHECK_THROWS_AS(zeta_truncated(builtin("pi"), 1.5), Error);
  CHECK_THROWS_AS(zeta_upper_bound(builtin("pi"), 1.0), Error);
  CHECK_THROWS_AS(zeta_truncated(builtin("pi"), 0.5, 0), Error);
}

TEST_CASE("truncation is monotone in M") {
  for (const auto& w : {builtin("pi"), builtin("pi_log2"), make_sqrt(3)}) {
    double prev = 0.0;
    for (unsigned m = 1; m <= 40; ++m) {
      double v = zeta_truncated(w, 0.7, m).series_value;
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}
