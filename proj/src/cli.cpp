#include "periods/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>

#include "periods/serialize.hpp"
#include "periods/suites.hpp"

namespace periods {

namespace {

UPoly parse_coefficients(const std::string& text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    c.push_back(Rational::parse(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  UPoly p(std::move(c));
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "coefficient list '" + text + "' is the zero polynomial");
  return p;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Internal:
    case ErrorKind::NonConvergence:
      return 1;
    default:
      return 2;
  }
}

std::string gallery_example(const std::string& name) {
  if (name == "log") return "log(2)";
  if (name == "zeta_even") return "zeta(2)";
  if (name == "sqrt") return "sqrt(2)";
  if (name == "rational") return "3/2";
  return name;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periods calculator: witnesses, degree bounds, Monte Carlo volumes, rational integrals", "periods"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string expr_text, expr2_text;
  std::uint64_t samples = 1000000, seed = 0;
  unsigned workers = 0;
  std::uint32_t batch = 1u << 16;
  double t = 0.5;
  unsigned terms = kDefaultZetaTerms;
  std::string num_text, den_text, from_text = "0", to_text = "1";
  std::vector<unsigned> asserted;
  std::string suite = "all";

  auto* eval = app.add_subcommand("eval", "Monte Carlo value of an expression");
  eval->add_option("expr", expr_text, "expression")->required();
  eval->add_option("--samples", samples, "samples per cell")->capture_default_str();
  eval->add_option("--seed", seed, "random seed")->capture_default_str();
  eval->add_option("--workers", workers, "worker threads (0 = all cores); never changes results");
  eval->add_option("--batch", batch, "points per counter stream")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "degree bound with provenance");
  bound->add_option("expr", expr_text, "expression")->required();

  auto* witness = app.add_subcommand("witness", "witness domains as JSON");
  witness->add_option("expr", expr_text, "expression")->required();

  auto* zeta = app.add_subcommand("zeta", "truncated zeta series from power bounds");
  zeta->add_option("expr", expr_text, "expression")->required();
  zeta->add_option("--t", t, "series variable in [0, 1)")->capture_default_str();
  zeta->add_option("--terms", terms, "number of terms M")->capture_default_str();

  auto* ratint_cmd = app.add_subcommand("ratint", "exact definite integral of a rational function");
  ratint_cmd->add_option("--num", num_text, "numerator coefficients, constant term first")->required();
  ratint_cmd->add_option("--den", den_text, "denominator coefficients or factored JSON")->required();
  ratint_cmd->add_option("--from", from_text, "lower limit")->capture_default_str();
  ratint_cmd->add_option("--to", to_text, "upper limit")->capture_default_str();

  auto* gallery_cmd = app.add_subcommand("gallery", "builtin witnesses");

  auto* report = app.add_subcommand("report", "transcendence consequences of two degree bounds");
  report->add_option("expr1", expr_text, "first expression")->required();
  report->add_option("expr2", expr2_text, "second expression")->required();
  report->add_option("--assert-degrees", asserted, "exact degrees d1 d2 taken as given")->expected(2);

  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "syntax"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      if (batch == 0) throw Error(ErrorKind::InvalidArgument, "--batch must be positive");
      Expr e = parse_expr(expr_text);
      PeriodWitness w = to_witness(e);
      Json j = to_json(evaluate_witness(w, samples, seed, SamplingOptions{batch, workers}));
      j["expression"] = print_expr(e);
      j["signature"] = w.signature().str();
      j["batch_size"] = batch;
      out << j.dump() << "\n";
    } else if (*bound) {
      Expr e = parse_expr(expr_text);
      PeriodWitness w = to_witness(e);
      Json j = to_json(w.bound());
      j["expression"] = print_expr(e);
      j["signature"] = w.signature().str();
      j["max_cell_dim"] = w.max_dim();
      out << j.dump() << "\n";
    } else if (*witness) {
      Expr e = parse_expr(expr_text);
      Json j = to_json(to_witness(e));
      j["expression"] = print_expr(e);
      out << j.dump() << "\n";
    } else if (*zeta) {
      Expr e = parse_expr(expr_text);
      Json j = to_json(zeta_truncated(to_witness(e), t, terms));
      j["expression"] = print_expr(e);
      out << j.dump() << "\n";
    } else if (*ratint_cmd) {
      UPoly num = parse_coefficients(num_text);
      Rational lo = Rational::parse(from_text), hi = Rational::parse(to_text);
      std::string trimmed = den_text.substr(std::min(den_text.find_first_not_of(" \t"), den_text.size()));
      ratint::ClosedForm cf;
      ratint::FactorList factors;
      std::optional<ratint::RationalFunction> f;
      if (!trimmed.empty() && trimmed.front() == '{') {
        Json dj;
        try {
          dj = Json::parse(trimmed);
        } catch (const Json::exception& ex) {
          throw Error(ErrorKind::Syntax, std::string("factored denominator: ") + ex.what());
        }
        auto [fl, lead] = factor_list_from_json(dj);
        factors = fl;
        f.emplace(num, factors.expand() * lead);
        cf = ratint::integrate_definite(*f, factors, lo, hi);
      } else {
        f.emplace(num, parse_coefficients(trimmed));
        if (f->den().degree() > 0) factors = ratint::factor_denominator(f->den());
        cf = ratint::integrate_definite(*f, factors, lo, hi);
      }
      Json j = to_json(cf);
      j["oracle"] = ratint::quad_oracle(*f, lo, hi, 1e-10);
      j["factors"] = to_json(factors);
      j["integrand"] = "(" + f->num().str() + ")/(" + f->den().str() + ")";
      out << j.dump() << "\n";
    } else if (*gallery_cmd) {
      Json arr = Json::array();
      for (const auto& g : gallery()) {
        Json item = {{"name", g.name}, {"expression", g.expression}, {"description", g.description}};
        std::string example = gallery_example(g.name);
        item["example"] = example;
        item["example_bound"] = to_json(to_witness(parse_expr(example)).bound());
        arr.push_back(item);
      }
      out << arr.dump() << "\n";
    } else if (*report) {
      PeriodWitness a = to_witness(parse_expr(expr_text));
      PeriodWitness b = to_witness(parse_expr(expr2_text));
      std::optional<std::pair<unsigned, unsigned>> pair;
      if (!asserted.empty()) pair = std::make_pair(asserted[0], asserted[1]);
      out << to_json(transcendence_report(a, b, pair)).dump() << "\n";
    } else if (*verify) {
      std::vector<SuiteResult> results = run_suite(suite, seed);
      Json arr = Json::array();
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed();
        arr.push_back({{"name", r.name},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"passed", r.passed()},
                       {"messages", r.messages}});
      }
      out << Json{{"suites", arr}, {"passed", ok}, {"seed", seed}}.dump() << "\n";
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << to_json(e).dump() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace periods
