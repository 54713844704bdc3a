#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "periods/expr.hpp"
#include "periods/ratint.hpp"

namespace periods {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First few failure descriptions.
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
  void check(bool ok, const std::string& what);
};

const std::vector<std::string>& suite_names();
/// Runs one named suite, or every suite for "all".
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed);

/// Leaves from the builtin gallery plus rationals and surds; inner nodes of every kind.
Expr random_expr(std::mt19937_64& rng, unsigned depth);

/// Witnesses used for the pairwise zeta checks.
std::vector<std::pair<std::string, PeriodWitness>> zeta_gallery();

struct RatintCase {
  std::string label;
  ratint::RationalFunction f;
  Rational lo;
  Rational hi;
};
/// Integrals covering linear, repeated linear, quadratic and repeated quadratic denominators.
std::vector<RatintCase> ratint_corpus();

/// Random factor list of total degree <= max_degree and a numerator of lower degree.
std::pair<ratint::FactorList, UPoly> random_partial_fraction_case(std::mt19937_64& rng, int max_degree);

}  // namespace periods
