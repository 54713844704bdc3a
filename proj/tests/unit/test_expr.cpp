#include <doctest.h>

#include <random>
#include <sstream>

#include "periods/cli.hpp"
#include "periods/expr.hpp"
#include "periods/serialize.hpp"
#include "periods/suites.hpp"

using namespace periods;

namespace {

struct Run {
  int code;
  Json out;
  Json err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_command(args, o, e);
  Run r{code, nullptr, nullptr};
  if (!o.str().empty() && (o.str()[0] == '{' || o.str()[0] == '[')) r.out = Json::parse(o.str());
  if (!e.str().empty()) r.err = Json::parse(e.str());
  return r;
}

}  // namespace

TEST_CASE("parse examples") {
  Expr m = parse_expr("mul(pi, log(2))");
  CHECK(m == Expr::mul(Expr::builtin("pi"), Expr::builtin("log", {Rational(2)})));
  Expr a = parse_expr("add(pi, neg(pi))");
  CHECK(a == Expr::add(Expr::builtin("pi"), Expr::neg(Expr::builtin("pi"))));
  Expr l = parse_expr("log(1/2)");
  CHECK(l == Expr::builtin("log", {Rational(1, 2)}));
  CHECK_THROWS_AS(to_witness(l), Error);
  Expr s = parse_expr("scale(1/2 + 3/4 i, pow(pi, 2))");
  CHECK(s.value == GaussianRational{Rational(1, 2), Rational(3, 4)});
  CHECK(parse_expr("scale(2 - 1 i, pi)").value.im == Rational(-1));
  CHECK(parse_expr("  -7/3 ") == Expr::literal(Rational(-7, 3)));
  CHECK(parse_expr("zeta(4)") == Expr::builtin("zeta", {Rational(4)}));
  CHECK(parse_expr("sqrt(5)") == Expr::builtin("sqrt", {Rational(5)}));
}

TEST_CASE("syntax errors carry offsets and expectations") {
  auto offset = [](const std::string& text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const SyntaxError& e) {
      return e.offset();
    }
    return 9999;
  };
  CHECK(offset("add(pi)") == 6);
  CHECK(offset("mul(pi, )") == 8);
  CHECK(offset("pow(pi, 0)") == 8);
  CHECK(offset("pi pi") == 3);
  CHECK(offset("foo") == 0);
  CHECK(offset("1/0") == 2);
  CHECK(offset("") == 0);
  try {
    parse_expr("add(pi");
  } catch (const SyntaxError& e) {
    CHECK(e.expected() == std::vector<std::string>{","});
    CHECK(e.kind() == ErrorKind::Syntax);
  }
}

TEST_CASE("print and parse round-trip on generated expressions") {
  std::mt19937_64 rng(314);
  for (int i = 0; i < 200; ++i) {
    Expr e = random_expr(rng, 4);
    std::string text = print_expr(e);
    REQUIRE(parse_expr(text) == e);
    REQUIRE(print_expr(parse_expr(text)) == text);
  }
}

TEST_CASE("cli eval and bound") {
  Run e = run({"eval", "mul(pi, log(2))", "--samples", "4000000", "--seed", "7"});
  REQUIRE(e.code == 0);
  double mean = e.out["re"]["mean"].get<double>(), se = e.out["re"]["stderr"].get<double>();
  CHECK(std::fabs(mean - 2.177586) <= 3.0 * se);
  Run b = run({"bound", "mul(pi, log(2))"});
  CHECK(b.code == 0);
  CHECK(b.out["value"] == 3);
  CHECK(b.out["provenance"] == "registry");
}

TEST_CASE("cli zeta, ratint, gallery, report") {
  Run z = run({"zeta", "3/2", "--t", "0.5", "--terms", "40"});
  REQUIRE(z.code == 0);
  CHECK(z.out["series_value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(z.out["M"] == 40);

  Run r = run({"ratint", "--num", "1,1", "--den", "1,0,1", "--from", "0", "--to", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out["float_value"].get<double>() == doctest::Approx(1.131972).epsilon(1e-6));
  CHECK(r.out.contains("arctan"));
  CHECK(r.out.contains("log"));
  CHECK(r.out["constant"]["exact"] == "0");

  Run f = run({"ratint", "--num", "1", "--den", R"({"quadratic": [{"b": "0", "c": "1", "mult": 2}]})"});
  REQUIRE(f.code == 0);
  CHECK(f.out["float_value"].get<double>() == doctest::Approx(0.642699).epsilon(1e-6));

  Run g = run({"gallery"});
  REQUIRE(g.code == 0);
  CHECK(g.out.size() >= 5);

  Run rep = run({"report", "pi", "pi_log2", "--assert-degrees", "2", "3"});
  REQUIRE(rep.code == 0);
  CHECK(rep.out["summary"] == "sum and quotient transcendental; linearly independent");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"eval", "add(pi"}).code == 2);
  CHECK(run({"eval", "add(pi"}).err["error"] == "syntax");
  CHECK(run({"eval", "log(1/2)"}).code == 2);
  CHECK(run({"eval", "pi", "--samples", "10"}).code == 2);
  CHECK(run({"zeta", "pi", "--t", "1.5"}).code == 2);
  CHECK(run({"ratint", "--num", "1", "--den", "-1,2"}).code == 2);
  CHECK(run({"ratint", "--num", "1", "--den", "-2,0,0,1", "--from", "2", "--to", "3"}).err["error"] ==
        "unfactorable");
  CHECK(run({"ratint", "--num", "1", "--den", "{bad json"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  Run v = run({"verify", "--suite", "zeta", "--seed", "1"});
  CHECK(v.code == 0);
  CHECK(v.out["passed"] == true);
}
