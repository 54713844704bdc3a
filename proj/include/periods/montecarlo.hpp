#pragma once

#include <cstddef>
#include <cstdint>

#include "periods/domain.hpp"
#include "periods/witness.hpp"

namespace periods {

struct VolumeEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;  // per cell
  std::uint64_t seed = 0;
};

/// Difference of two volume estimates (errors in quadrature).
struct SignedEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct ComplexEstimate {
  SignedEstimate re;
  SignedEstimate im;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct SamplingOptions {
  /// Points per counter stream; part of the reproducibility key.
  std::uint32_t batch_size = 1u << 16;
  /// 0 = hardware concurrency. Never affects results.
  unsigned workers = 0;
};

inline constexpr std::uint64_t kMinSamples = 1000;

/// Rejection sampling over each cell's box. Cell i draws from the Philox
/// stream (seed, stream_base + i, batch).
VolumeEstimate estimate(const Domain& domain, std::uint64_t samples_per_cell, std::uint64_t seed,
                        const SamplingOptions& options = {}, std::uint64_t stream_base = 0);

/// All four buckets; bucket b uses stream_base = b << 40.
ComplexEstimate evaluate_witness(const PeriodWitness& w, std::uint64_t samples_per_cell, std::uint64_t seed,
                                 const SamplingOptions& options = {});

/// Accepted-point count for one cell, the primitive under estimate().
std::uint64_t count_accepted(const Cell& cell, std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                             const SamplingOptions& options = {});

}  // namespace periods
