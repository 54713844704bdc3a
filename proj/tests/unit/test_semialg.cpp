#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "periods/domain.hpp"
#include "periods/montecarlo.hpp"
#include "periods/witness.hpp"

using namespace periods;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial k(std::size_t n, long c) { return Polynomial::constant(n, Rational(c)); }

Cell disk() { return Cell(2, {k(2, 1) - x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1)}, Box({{-1, 1}, {-1, 1}})); }

Cell log2_cell() {
  return Cell(2, {x(2, 0) - k(2, 1), k(2, 2) - x(2, 0), x(2, 1), k(2, 1) - x(2, 0) * x(2, 1)},
              Box({{1, 2}, {0, 1}}));
}

constexpr std::uint64_t kN = 1000000;

void check_volume(const Domain& d, double expected, std::uint64_t seed = 3) {
  VolumeEstimate e = estimate(d, kN, seed);
  CHECK(std::fabs(e.mean - expected) <= 3.0 * e.std_error + 1e-12);
}

}  // namespace

TEST_CASE("poly_eval examples") {
  Polynomial p = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  std::vector<Rational> one = {1, 1};
  CHECK(p.eval(std::span<const Rational>(one)) == Rational(2));
  std::vector<Rational> origin = {0, 0};
  CHECK((p - k(2, 1)).eval(std::span<const Rational>(origin)) == Rational(-1));
  Polynomial r = x(3, 2) * (x(3, 0) * x(3, 0) + x(3, 1) * x(3, 1) + k(3, 1)) - k(3, 1);
  std::vector<double> pt = {0.0, 0.0, 1.0};
  CHECK(r.eval(std::span<const double>(pt)) == 0.0);
  std::vector<double> bad = {1.0};
  CHECK_THROWS_AS(p.eval(std::span<const double>(bad)), Error);
}

TEST_CASE("float evaluation is exact then rounded once") {
  // (x - 1e8)^2 - 1e16 + 2e8 x at x = 1 + 2^-30 cancels catastrophically in doubles.
  Polynomial p = x(1, 0) * x(1, 0);
  double v = 1.0 + std::ldexp(1.0, -30);
  std::vector<double> pt = {v};
  CHECK(p.eval(std::span<const double>(pt)) == (Rational::from_double(v) * Rational::from_double(v)).to_double());
}

TEST_CASE("cell_contains examples") {
  std::vector<double> o = {0.0, 0.0}, out = {1.1, 0.0}, in = {1.5, 0.5};
  CHECK(disk().contains(o));
  CHECK_FALSE(disk().contains(out));
  CHECK(log2_cell().contains(in));
  std::vector<double> bad = {0.0};
  CHECK_THROWS_AS(disk().contains(bad), Error);
}

TEST_CASE("poly_shift examples") {
  CHECK((x(1, 0) * x(1, 0)).shift(0, Rational(1)) == x(1, 0) * x(1, 0) - x(1, 0) * Rational(2) + k(1, 1));
  CHECK((x(2, 0) + x(2, 1)).shift(1, Rational(2)) == x(2, 0) + x(2, 1) - k(2, 2));
  CHECK(k(3, 7).shift(2, Rational(5)) == k(3, 7));
}

TEST_CASE("poly_shift agrees with substitution on random points") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-9, 9), d(1, 7);
  auto rnd = [&] { return Rational(c(rng)) / Rational(d(rng)); };
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p(3);
    for (int t = 0; t < 6; ++t) {
      p.add_term({static_cast<std::uint32_t>(d(rng) % 4), static_cast<std::uint32_t>(d(rng) % 3),
                  static_cast<std::uint32_t>(d(rng) % 5)},
                 rnd());
    }
    std::size_t axis = static_cast<std::size_t>(trial % 3);
    Rational off = rnd();
    Polynomial q = p.shift(axis, off);
    std::vector<Rational> pt = {rnd(), rnd(), rnd()};
    std::vector<Rational> moved = pt;
    moved[axis] -= off;
    REQUIRE(q.eval(std::span<const Rational>(pt)) == p.eval(std::span<const Rational>(moved)));
  }
}

TEST_CASE("product examples") {
  Domain d({disk()});
  Domain dd = product(d, d);
  REQUIRE(dd.size() == 1);
  CHECK(dd.cells()[0].dim() == 4);
  check_volume(dd, M_PI * M_PI);
  CHECK(product(d, Domain()).empty());
  Domain cyl = product(d, Domain({interval_cell(Rational(0), Rational(1))}));
  CHECK(cyl.cells()[0].dim() == 3);
  check_volume(cyl, M_PI);
}

TEST_CASE("pad examples") {
  Domain d({disk()});
  CHECK(pad(d, 0) == d);
  Domain sq = pad(Domain({interval_cell(Rational(0), Rational(1))}), 1);
  CHECK(sq.cells()[0].dim() == 2);
  check_volume(sq, 1.0);
  Domain p = pad(d, 1);
  CHECK(p.cells()[0].dim() == 3);
  check_volume(p, M_PI);
}

TEST_CASE("translate examples") {
  Domain d({disk()});
  Domain moved = translate(d, 0, Rational(10));
  CHECK(moved.cells()[0].box()[0].lo == Rational(9));
  std::vector<double> c = {10.0, 0.0};
  CHECK(moved.cells()[0].contains(c));
  check_volume(moved, M_PI);
  CHECK(translate(d, 0, Rational(0)) == d);
  CHECK(translate(Domain(), 0, Rational(3)).empty());
  CHECK_THROWS_AS(translate(d, 5, Rational(1)), Error);
}

TEST_CASE("materialize examples") {
  Domain mixed({disk(), interval_cell(Rational(0), Rational(1))});
  Domain m = materialize_single_domain(mixed);
  CHECK(m.size() == 2);
  CHECK(m.cells()[0].dim() == 2);
  CHECK(m.cells()[1].dim() == 2);
  CHECK(boxes_pairwise_disjoint(m));
  check_volume(m, M_PI + 1.0);

  Domain single({disk()});
  Domain s = materialize_single_domain(single);
  CHECK(s.size() == 1);
  check_volume(s, M_PI);

  Domain two({disk(), disk()});
  CHECK_FALSE(boxes_pairwise_disjoint(two));
  Domain t = materialize_single_domain(two);
  CHECK(boxes_pairwise_disjoint(t));
  check_volume(t, 2.0 * M_PI);

  CHECK_THROWS_AS(materialize_single_domain(Domain()), Error);
}

TEST_CASE("dropping a constraint never shrinks the accepted set") {
  Cell full = log2_cell();
  std::vector<Polynomial> fewer(full.constraints().begin(), full.constraints().end() - 1);
  Cell loose(2, fewer, full.box());
  SamplingOptions opt;
  CHECK(count_accepted(full, 100000, 9, 0, opt) <= count_accepted(loose, 100000, 9, 0, opt));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.9, 2.1);
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> p = {u(rng), u(rng) - 1.0};
    if (full.contains(p)) REQUIRE(loose.contains(p));
  }
}

TEST_CASE("box spot check accepts valid boxes and rejects undersized ones") {
  CHECK(box_spot_check(disk(), 1));
  CHECK(box_spot_check(log2_cell(), 2));
  Cell tight(2, disk().constraints(), Box({{Rational(-1, 2), Rational(1, 2)}, {-1, 1}}));
  CHECK_FALSE(box_spot_check(tight, 3));
  for (const auto& name : {"pi", "pi_log2", "pi_squared"}) {
    PeriodWitness w = builtin(name);
    for (const auto& c : w.re_pos().cells()) CHECK(box_spot_check(c, 4));
  }
}

TEST_CASE("box and cell validation") {
  CHECK_THROWS_AS(Box({{Rational(1), Rational(0)}}), Error);
  CHECK_THROWS_AS(Cell(3, {}, Box({{0, 1}})), Error);
  CHECK_THROWS_AS(Cell(2, {x(3, 0)}, Box({{0, 1}, {0, 1}})), Error);
}
