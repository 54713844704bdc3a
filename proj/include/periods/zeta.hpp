#pragma once

#include <string>
#include <vector>

#include "periods/witness.hpp"

namespace periods {

/// Truncated zeta series built from power-degree upper bounds, so the value
/// upper-bounds the true zeta function of the period.
struct ZetaEvaluation {
  double t = 0.0;
  unsigned terms = 0;
  double series_value = 1.0;
  /// exp(t * ledger / (1 - t)).
  double closed_bound = 1.0;
  /// b_1..b_M.
  std::vector<unsigned> power_bounds;
  /// t^(M+1) * b_1 / (1 - t), a bound on the omitted exponent when b_m <= m b_1.
  double tail_bound = 0.0;
  std::string note;
};

inline constexpr unsigned kDefaultZetaTerms = 32;

ZetaEvaluation zeta_truncated(const PeriodWitness& w, double t, unsigned terms = kDefaultZetaTerms,
                              const Registry& registry = default_registry());
/// 1 / (1 - t).
double zeta_closed_algebraic(double t);
double zeta_upper_bound(const PeriodWitness& w, double t);
double zeta_sum_bound(const PeriodWitness& a, const PeriodWitness& b, double t);

}  // namespace periods
