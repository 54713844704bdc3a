#include "periods/serialize.hpp"

#include <charconv>
#include <cmath>

namespace periods {

std::string decimal_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string decimal_string(long double v) { return decimal_string(static_cast<double>(v)); }

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return decimal_string(v);
}

std::string exponent_key(const Exponents& e) {
  std::string k;
  for (std::size_t i = 0; i < e.size(); ++i) k += (i ? "," : "") + std::to_string(e[i]);
  return k;
}

}  // namespace

Json exact_json(const Rational& q) { return {{"exact", q.str()}, {"decimal", decimal_string(q.to_double())}}; }

Json exact_json(const QuadSurd& q) {
  return {{"exact", q.str()}, {"decimal", decimal_string(q.to_long_double())}};
}

Json to_json(const Polynomial& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[exponent_key(e)] = c.str();
  return j;
}

Json to_json(const Cell& c) {
  Json cons = Json::array();
  for (const auto& p : c.constraints()) cons.push_back(to_json(p));
  Json box = Json::array();
  for (const auto& iv : c.box().axes()) box.push_back({iv.lo.str(), iv.hi.str()});
  return {{"dim", c.dim()}, {"constraints", cons}, {"box", box}};
}

Json to_json(const Domain& d) {
  Json j = Json::array();
  for (const auto& c : d.cells()) j.push_back(to_json(c));
  return j;
}

Json to_json(const DegreeBound& b) {
  Json v = b.infinite() ? Json("infinite") : Json(b.value);
  return {{"value", v}, {"provenance", provenance_name(b.provenance)}};
}

Json to_json(const PeriodWitness& w) {
  return {{"signature", w.signature().str()},
          {"bound", to_json(w.bound())},
          {"buckets",
           {{"re_pos", to_json(w.re_pos())},
            {"re_neg", to_json(w.re_neg())},
            {"im_pos", to_json(w.im_pos())},
            {"im_neg", to_json(w.im_neg())}}}};
}

Json to_json(const VolumeEstimate& e) {
  return {{"mean", number(e.mean)}, {"stderr", number(e.std_error)}, {"samples", e.samples}, {"seed", e.seed}};
}

Json to_json(const ComplexEstimate& e) {
  return {{"re", {{"mean", number(e.re.mean)}, {"stderr", number(e.re.std_error)}}},
          {"im", {{"mean", number(e.im.mean)}, {"stderr", number(e.im.std_error)}}},
          {"mean", number(e.re.mean)},
          {"stderr", number(e.re.std_error)},
          {"samples", e.samples},
          {"seed", e.seed}};
}

Json to_json(const ratint::ClosedForm& c) {
  auto terms = [](const std::vector<ratint::SurdTerm>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back({{"coeff", exact_json(t.coeff)}, {"arg", exact_json(t.arg)}});
    return a;
  };
  long double v = c.value();
  return {{"constant", exact_json(c.constant)},
          {"arctan", terms(c.arctan)},
          {"log", terms(c.log)},
          {"float_value", number(static_cast<double>(v))},
          {"expression", c.str()}};
}

Json to_json(const ratint::FactorList& f) {
  Json lin = Json::array(), quad = Json::array();
  for (const auto& l : f.linear) lin.push_back({{"root", l.root.str()}, {"mult", l.multiplicity}});
  for (const auto& q : f.quadratic) quad.push_back({{"b", q.b.str()}, {"c", q.c.str()}, {"mult", q.multiplicity}});
  return {{"leading", "1"}, {"linear", lin}, {"quadratic", quad}};
}

Json to_json(const ZetaEvaluation& z) {
  Json bounds = Json::array();
  for (auto b : z.power_bounds) bounds.push_back(b == DegreeBound::kInfinite ? Json("infinite") : Json(b));
  return {{"t", z.t},
          {"M", z.terms},
          {"series_value", number(z.series_value)},
          {"closed_bound", number(z.closed_bound)},
          {"power_bounds", bounds},
          {"tail_bound", number(z.tail_bound)},
          {"note", z.note}};
}

Json to_json(const TranscendenceReport& r) {
  auto bound = [](unsigned b) { return b == DegreeBound::kInfinite ? Json("infinite") : Json(b); };
  Json j = {{"bound1", bound(r.bound1)},
            {"bound2", bound(r.bound2)},
            {"conditional", r.conditional},
            {"summary", r.summary},
            {"conclusions", r.conclusions},
            {"e_plus_pi_note", r.e_plus_pi_note}};
  j["asserted_degrees"] = r.asserted ? Json::array({r.asserted->first, r.asserted->second}) : Json(nullptr);
  return j;
}

Json to_json(const Error& e) {
  Json j = {{"error", error_kind_name(e.kind())}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    j["offset"] = s->offset();
    j["expected"] = s->expected();
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::InvalidArgument, "expected a rational string, got " + j.dump());
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "polynomial must be a JSON object");
  Polynomial p(nvars);
  for (const auto& [key, val] : j.items()) {
    Exponents e;
    std::size_t start = 0;
    while (start <= key.size()) {
      std::size_t comma = key.find(',', start);
      std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      unsigned long v = 0;
      auto res = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size()) {
        throw Error(ErrorKind::InvalidArgument, "bad exponent key '" + key + "'");
      }
      e.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (e.size() != nvars) throw Error(ErrorKind::DimensionMismatch, "exponent key '" + key + "' has wrong arity");
    p.add_term(e, rational_from_json(val));
  }
  return p;
}

Cell cell_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("box")) {
    throw Error(ErrorKind::InvalidArgument, "cell must have dim and box");
  }
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Polynomial> cons;
  for (const auto& p : j.value("constraints", Json::array())) cons.push_back(polynomial_from_json(p, dim));
  std::vector<Interval> axes;
  for (const auto& iv : j.at("box")) {
    if (!iv.is_array() || iv.size() != 2) throw Error(ErrorKind::InvalidArgument, "box axis must be [lo, hi]");
    axes.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
  }
  return Cell(dim, std::move(cons), Box(std::move(axes)));
}

Domain domain_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("cells") ? j.at("cells") : j;
  if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "domain must be an array of cells");
  std::vector<Cell> cells;
  for (const auto& c : arr) cells.push_back(cell_from_json(c));
  return Domain(std::move(cells));
}

std::pair<ratint::FactorList, Rational> factor_list_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "factored denominator must be a JSON object");
  ratint::FactorList f;
  auto mult = [](const Json& t) {
    long m = t.value("mult", 1L);
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be >= 1");
    return static_cast<unsigned>(m);
  };
  for (const auto& t : j.value("linear", Json::array())) f.linear.push_back({rational_from_json(t.at("root")), mult(t)});
  for (const auto& t : j.value("quadratic", Json::array())) {
    f.quadratic.push_back({rational_from_json(t.at("b")), rational_from_json(t.at("c")), mult(t)});
  }
  Rational lead = j.contains("leading") ? rational_from_json(j.at("leading")) : Rational(1);
  if (lead.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading coefficient must be nonzero");
  f.validate();
  return {f, lead};
}

}  // namespace periods
