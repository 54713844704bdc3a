#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "periods/cli.hpp"
#include "periods/serialize.hpp"
#include "periods/suites.hpp"

namespace py = pybind11;
using namespace periods;

namespace {

UPoly coefficients(const std::vector<std::string>& ascending) {
  std::vector<Rational> c;
  for (const auto& s : ascending) c.push_back(Rational::parse(s));
  return UPoly(std::move(c));
}

// Results cross the boundary as JSON text; the Python package decodes them.
std::string eval(const std::string& text, std::uint64_t samples, std::uint64_t seed, unsigned workers,
                 std::uint32_t batch) {
  Expr e = parse_expr(text);
  PeriodWitness w = to_witness(e);
  ComplexEstimate est;
  {
    py::gil_scoped_release release;
    est = evaluate_witness(w, samples, seed, SamplingOptions{batch, workers});
  }
  Json j = to_json(est);
  j["expression"] = print_expr(e);
  j["signature"] = w.signature().str();
  return j.dump();
}

std::string bound(const std::string& text) {
  Expr e = parse_expr(text);
  PeriodWitness w = to_witness(e);
  Json j = to_json(w.bound());
  j["expression"] = print_expr(e);
  j["signature"] = w.signature().str();
  j["max_cell_dim"] = w.max_dim();
  return j.dump();
}

std::string witness(const std::string& text) { return to_json(to_witness(parse_expr(text))).dump(); }

std::string zeta(const std::string& text, double t, unsigned terms) {
  return to_json(zeta_truncated(to_witness(parse_expr(text)), t, terms)).dump();
}

std::string integrate(const std::vector<std::string>& num, const std::vector<std::string>& den, const std::string& lo,
                   const std::string& hi) {
  ratint::RationalFunction f(coefficients(num), coefficients(den));
  Rational a = Rational::parse(lo), b = Rational::parse(hi);
  ratint::FactorList factors;
  if (f.den().degree() > 0) factors = ratint::factor_denominator(f.den());
  Json j = to_json(ratint::integrate_definite(f, factors, a, b));
  j["oracle"] = ratint::quad_oracle(f, a, b, 1e-10);
  j["factors"] = to_json(factors);
  return j.dump();
}

std::string sturm(const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi) {
  return std::to_string(ratint::sturm_count(coefficients(coeffs), Rational::parse(lo), Rational::parse(hi)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "PeriodsError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = error_kind_name(e.kind());
      exc.attr("detail") = to_json(e).dump();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("normalize", [](const std::string& s) { return print_expr(parse_expr(s)); }, py::arg("expr"));
  m.def("eval", &eval, py::arg("expr"), py::arg("samples") = 1000000, py::arg("seed") = 0, py::arg("workers") = 0,
        py::arg("batch") = 1u << 16);
  m.def("bound", &bound, py::arg("expr"));
  m.def("witness", &witness, py::arg("expr"));
  m.def("zeta", &zeta, py::arg("expr"), py::arg("t") = 0.5, py::arg("terms") = kDefaultZetaTerms);
  m.def("ratint", &integrate, py::arg("num"), py::arg("den"), py::arg("lo") = "0", py::arg("hi") = "1");
  m.def("sturm", &sturm, py::arg("coeffs"), py::arg("lo"), py::arg("hi"));
  m.def("power_bounds", [](const std::string& s, unsigned m) { return power_bounds(to_witness(parse_expr(s)), m); },
        py::arg("expr"), py::arg("max_power"));
  m.def("suite_names", &suite_names);
  m.def("run", &run, py::arg("args"));
}
