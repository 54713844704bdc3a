#include <doctest.h>

#include <cmath>
#include <random>

#include "periods/exactnum.hpp"

using namespace periods;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4").str() == "-4");
  CHECK(Rational::parse(" 10/-4 ").str() == "-5/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    Rational a = Rational(num(rng)) / Rational(den(rng));
    Rational b = Rational(num(rng)) / Rational(den(rng));
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("rational to double rounds correctly") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("surd examples") {
  QuadSurd r2 = QuadSurd::sqrt_of(Rational(2));
  CHECK(r2 * r2 == QuadSurd(Rational(2)));
  QuadSurd a = QuadSurd(Rational(1)) + r2;
  QuadSurd b = QuadSurd(Rational(1)) + QuadSurd::sqrt_of(Rational(3));
  CHECK_THROWS_AS(a * b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedRadicand);
  }
  CHECK(QuadSurd::sqrt_of(Rational(8)).str() == "0 + 2*sqrt(2)");
  CHECK(QuadSurd::sqrt_of(Rational(9, 4)) == QuadSurd(Rational(3, 2)));
  CHECK(QuadSurd::sqrt_of(Rational(1, 2)).str() == "0 + 1/2*sqrt(2)");
}

TEST_CASE("surd sign is exact") {
  // 1393^2 = 2*985^2 - 1, so 1393 - 985*sqrt(2) is about -3.6e-4
  QuadSurd x(Rational(1393), Rational(-985), 2);
  CHECK(x.sign() < 0);
  CHECK((-x).sign() > 0);
  // 3363^2 = 2*2378^2 + 1
  CHECK(QuadSurd(Rational(3363), Rational(-2378), 2).sign() > 0);
  CHECK(QuadSurd(Rational(-3363), Rational(2378), 2).sign() < 0);
  CHECK(QuadSurd().sign() == 0);
}

TEST_CASE("surd arithmetic matches floating evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> v(-50, 50), d(1, 20);
  const long radicands[] = {2, 3, 5, 6, 7, 10};
  for (int i = 0; i < 2000; ++i) {
    long rad = radicands[i % 6];
    QuadSurd x(Rational(v(rng)) / Rational(d(rng)), Rational(v(rng)) / Rational(d(rng)), rad);
    QuadSurd y(Rational(v(rng)) / Rational(d(rng)), Rational(v(rng)) / Rational(d(rng)), rad);
    long double fx = x.to_long_double(), fy = y.to_long_double();
    long double p = (x * y).to_long_double();
    REQUIRE(std::fabs(static_cast<double>(p - fx * fy)) <= 1e-12 * std::max(1.0L, std::fabs(fx * fy)));
    if (!y.is_zero()) {
      long double q = (x / y).to_long_double();
      REQUIRE(std::fabs(static_cast<double>(q - fx / fy)) <= 1e-9 * std::max(1.0L, std::fabs(fx / fy)));
    }
  }
}

namespace {

// Akiyama-Tanigawa: modern Bernoulli numbers with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(int n) {
  std::vector<Rational> out, a(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1) / Rational(m + 1);
    for (int j = m; j >= 1; --j) {
      auto J = static_cast<std::size_t>(j);
      a[J - 1] = Rational(j) * (a[J - 1] - a[J]);
    }
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli numbers in the positive convention") {
  CHECK(bernoulli(1) == Rational(1, 6));
  CHECK(bernoulli(2) == Rational(1, 30));
  CHECK(bernoulli(3) == Rational(1, 42));
  CHECK(bernoulli(6) == Rational(691, 2730));
  CHECK_THROWS_AS(bernoulli(0), Error);
  CHECK_THROWS_AS(bernoulli(65), Error);
  CHECK_NOTHROW(bernoulli(64));
}

TEST_CASE("bernoulli agrees with an independent algorithm") {
  auto modern = akiyama_tanigawa(80);
  for (int k = 1; k <= 40; ++k) REQUIRE(bernoulli(k) == modern[static_cast<std::size_t>(2 * k)].abs());
}

TEST_CASE("bernoulli satisfies the defining recurrence") {
  // sum_{j<n} C(n+1, j) B_j = -(n+1) B_n with modern numbers, B_{2k} = (-1)^(k+1) bernoulli(k).
  auto modern = [](int j) -> Rational {
    if (j == 0) return Rational(1);
    if (j == 1) return Rational(-1, 2);
    if (j % 2) return Rational();
    Rational b = bernoulli(j / 2);
    return (j / 2) % 2 ? b : -b;
  };
  for (int n = 1; n <= 40; ++n) {
    Rational sum;
    mpz_class c = 1;
    for (int j = 0; j <= n; ++j) {
      sum += Rational(c, 1) * modern(j);
      c = c * (n + 1 - j) / (j + 1);
    }
    REQUIRE(sum.is_zero());
  }
}
