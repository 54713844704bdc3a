#include "periods/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "periods/philox.hpp"

namespace periods {

namespace {

/// Double-precision evaluator for one constraint.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      Term t{c.to_double(), factors_.size(), 0};
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) factors_.push_back({static_cast<std::uint32_t>(i), e[i]});
      }
      t.factor_end = factors_.size();
      terms_.push_back(t);
    }
  }

  double eval(const double* x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (std::size_t f = t.factor_begin; f < t.factor_end; ++f) {
        double base = x[factors_[f].var];
        double pw = base;
        for (std::uint32_t k = 1; k < factors_[f].exp; ++k) pw *= base;
        v *= pw;
      }
      acc += v;
    }
    return acc;
  }

 private:
  struct Term {
    double coef;
    std::size_t factor_begin;
    std::size_t factor_end;
  };
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
  };
  std::vector<Term> terms_;
  std::vector<Factor> factors_;
};

struct CompiledCell {
  std::vector<double> lo;
  std::vector<double> width;
  std::vector<CompiledPolynomial> constraints;

  explicit CompiledCell(const Cell& c) {
    for (const auto& iv : c.box().axes()) {
      lo.push_back(iv.lo.to_double());
      width.push_back(iv.width().to_double());
    }
    for (const auto& p : c.constraints()) constraints.emplace_back(p);
  }

  bool accepts(const double* x) const {
    for (const auto& p : constraints) {
      if (p.eval(x) < 0.0) return false;
    }
    return true;
  }
};

std::uint64_t count_batch(const CompiledCell& cell, std::uint64_t n, std::uint64_t seed, std::uint64_t stream,
                          std::uint32_t batch) {
  PhiloxStream rng(seed, stream, batch);
  std::vector<double> x(cell.lo.size());
  std::uint64_t accepted = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = cell.lo[i] + cell.width[i] * rng.next_unit();
    if (cell.accepts(x.data())) ++accepted;
  }
  return accepted;
}

VolumeEstimate combine_into(VolumeEstimate acc, double box_volume, std::uint64_t accepted, std::uint64_t n) {
  double p = static_cast<double>(accepted) / static_cast<double>(n);
  acc.mean += box_volume * p;
  double se = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  acc.std_error = std::hypot(acc.std_error, se);
  return acc;
}

}  // namespace

std::uint64_t count_accepted(const Cell& cell, std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                             const SamplingOptions& options) {
  if (options.batch_size == 0) throw Error(ErrorKind::InvalidArgument, "batch size must be positive");
  CompiledCell compiled(cell);
  const std::uint64_t batch = options.batch_size;
  const std::uint64_t batches = (samples + batch - 1) / batch;
  if (batches > 0xFFFFFFFFull) throw Error(ErrorKind::TooLarge, "too many batches for one stream");
  std::vector<std::uint64_t> counts(batches, 0);

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));
  auto run = [&](std::uint64_t b) {
    std::uint64_t n = std::min(batch, samples - b * batch);
    counts[b] = count_batch(compiled, n, seed, stream, static_cast<std::uint32_t>(b));
  };
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < batches; ++b) run(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < batches; b = next++) run(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

VolumeEstimate estimate(const Domain& domain, std::uint64_t samples_per_cell, std::uint64_t seed,
                        const SamplingOptions& options, std::uint64_t stream_base) {
  if (samples_per_cell < kMinSamples) {
    throw Error(ErrorKind::InvalidArgument,
                "need at least " + std::to_string(kMinSamples) + " samples per cell");
  }
  VolumeEstimate acc;
  acc.samples = samples_per_cell;
  acc.seed = seed;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Cell& cell = domain.cells()[i];
    Rational vol = cell.box().volume();
    if (vol.is_zero()) continue;  // measure zero: exactly 0
    std::uint64_t accepted = count_accepted(cell, samples_per_cell, seed, stream_base + i, options);
    acc = combine_into(acc, vol.to_double(), accepted, samples_per_cell);
  }
  return acc;
}

ComplexEstimate evaluate_witness(const PeriodWitness& w, std::uint64_t samples_per_cell, std::uint64_t seed,
                                 const SamplingOptions& options) {
  auto bucket = [&](const Domain& d, std::uint64_t index) {
    return estimate(d, samples_per_cell, seed, options, index << 40);
  };
  VolumeEstimate rp = bucket(w.re_pos(), 0);
  VolumeEstimate rn = bucket(w.re_neg(), 1);
  VolumeEstimate ip = bucket(w.im_pos(), 2);
  VolumeEstimate in = bucket(w.im_neg(), 3);
  ComplexEstimate out;
  out.re = {rp.mean - rn.mean, std::hypot(rp.std_error, rn.std_error)};
  out.im = {ip.mean - in.mean, std::hypot(ip.std_error, in.std_error)};
  out.samples = samples_per_cell;
  out.seed = seed;
  return out;
}

}  // namespace periods
