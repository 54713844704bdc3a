#pragma once

#include <json.hpp>

#include "periods/domain.hpp"
#include "periods/expr.hpp"
#include "periods/montecarlo.hpp"
#include "periods/ratint.hpp"
#include "periods/witness.hpp"
#include "periods/zeta.hpp"

namespace periods {

using Json = nlohmann::json;

/// Shortest round-trip decimal string.
std::string decimal_string(double v);
std::string decimal_string(long double v);

/// {"exact": "p/q", "decimal": "..."}
Json exact_json(const Rational& q);
Json exact_json(const QuadSurd& q);

Json to_json(const Polynomial& p);
Json to_json(const Cell& c);
Json to_json(const Domain& d);
Json to_json(const DegreeBound& b);
Json to_json(const PeriodWitness& w);
Json to_json(const VolumeEstimate& e);
Json to_json(const ComplexEstimate& e);
Json to_json(const ratint::ClosedForm& c);
Json to_json(const ratint::FactorList& f);
Json to_json(const ZetaEvaluation& z);
Json to_json(const TranscendenceReport& r);
Json to_json(const Error& e);

Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);
Cell cell_from_json(const Json& j);
Domain domain_from_json(const Json& j);
/// {"leading", "linear": [{"root", "mult"}], "quadratic": [{"b", "c", "mult"}]}; returns the
/// factor list and the leading coefficient (default 1).
std::pair<ratint::FactorList, Rational> factor_list_from_json(const Json& j);

}  // namespace periods
