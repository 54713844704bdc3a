#pragma once

#include <array>
#include <cstdint>

namespace periods {

/// Philox4x32-10 (Salmon et al., Random123). Pure function of (key, counter),
/// so any partition of the counter space across workers yields the same bits.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter generate(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      ctr = single_round(ctr, key);
    }
    return ctr;
  }

  static constexpr Key key_from_seed(std::uint64_t seed) noexcept {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  }

  /// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
  static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
    std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr Counter single_round(const Counter& c, const Key& k) noexcept {
    std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    auto lo0 = static_cast<std::uint32_t>(p0);
    auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

/// Sequential draws from one (key, stream, batch) triple.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint32_t batch) noexcept
      : key_(Philox4x32::key_from_seed(seed)),
        ctr_{0, batch, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

  double next_unit() noexcept {
    if (used_ == 2) {
      block_ = Philox4x32::generate(ctr_, key_);
      ++ctr_[0];
      used_ = 0;
    }
    double u = used_ == 0 ? Philox4x32::to_unit(block_[0], block_[1]) : Philox4x32::to_unit(block_[2], block_[3]);
    ++used_;
    return u;
  }

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter block_{};
  int used_ = 2;
};

}  // namespace periods
