#pragma once

#include <array>
#include <cstdint>

namespace xcreg {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123 v1.x
/// constants). Stateless block function: one (counter, key) pair maps to
/// four 32-bit words, so independent streams are just distinct key halves
/// and parallel generation needs no locking or ordering.
struct Philox4x32 {
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                            const std::array<std::uint32_t, 2>& key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k[0] += kWeyl0;
        k[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
  }
};

/// Sequential view over one Philox stream. The key is the 64-bit seed,
/// the high counter words select the stream, the low words advance per
/// block. Draw order is part of the generator contract: callers consume
/// values in a fixed sequence to stay reproducible.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint64_t next_u64() {
    if (pos_ == 0) {
      buf_ = Philox4x32::block({static_cast<std::uint32_t>(block_),
                                static_cast<std::uint32_t>(block_ >> 32),
                                stream_lo_, stream_hi_},
                               key_);
      ++block_;
    }
    const std::uint64_t lo = buf_[pos_];
    const std::uint64_t hi = buf_[pos_ + 1];
    pos_ = (pos_ + 2) % 4;
    return (hi << 32) | lo;
  }

  /// Uniform on (0, 1]: 53-bit mantissa, never exactly 0.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  /// Standard normal via the basic Box-Muller transform. Each pair of
  /// uniforms yields two normals; the draw count per call is fixed.
  double next_normal();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable sub-seed for replication/cell indices of an experiment.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

}  // namespace xcreg
