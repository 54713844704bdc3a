#include "periods/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace periods {

namespace {

void check_t(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorKind::OutOfRange, "t must lie in [0, 1)");
}

double as_double(unsigned b) {
  return b == DegreeBound::kInfinite ? std::numeric_limits<double>::infinity() : static_cast<double>(b);
}

double exp_bound(double t, unsigned ledger) {
  if (t == 0.0) return 1.0;
  return std::exp(t * as_double(ledger) / (1.0 - t));
}

}  // namespace

ZetaEvaluation zeta_truncated(const PeriodWitness& w, double t, unsigned terms, const Registry& registry) {
  check_t(t);
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "need at least one term");
  ZetaEvaluation out;
  out.t = t;
  out.terms = terms;
  std::vector<unsigned> b = power_bounds(w, terms, registry);
  out.power_bounds.assign(b.begin() + 1, b.end());
  double exponent = 0.0;
  double tm = 1.0;
  for (unsigned m = 1; m <= terms; ++m) {
    tm *= t;
    if (tm == 0.0) break;
    exponent += tm * as_double(b[m]) / m;
  }
  out.series_value = std::exp(exponent);
  out.closed_bound = exp_bound(t, w.bound().value);
  out.tail_bound = t == 0.0 ? 0.0 : std::pow(t, terms + 1) * as_double(b[1]) / (1.0 - t);
  out.note = "upper-bound surrogate: deg(p^m) replaced by the bound b_m";
  return out;
}

double zeta_closed_algebraic(double t) {
  check_t(t);
  return 1.0 / (1.0 - t);
}

double zeta_upper_bound(const PeriodWitness& w, double t) {
  check_t(t);
  return exp_bound(t, w.bound().value);
}

double zeta_sum_bound(const PeriodWitness& a, const PeriodWitness& b, double t) {
  check_t(t);
  return exp_bound(t, std::max(a.bound().value, b.bound().value));
}

}  // namespace periods
