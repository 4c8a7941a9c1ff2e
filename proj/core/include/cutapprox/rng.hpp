#ifndef CUTAPPROX_RNG_HPP
#define CUTAPPROX_RNG_HPP

#include <array>
#include <cstdint>
#include <optional>

namespace cutapprox::rng {

/// One Philox 4x64-10 block: four 64-bit words from (counter, key).
/// Pure function of its inputs, so any block of the stream can be
/// regenerated independently.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// Seedable counter-based stream.  A fixed (seed, stream_id) pair always
/// yields the same sequence; distinct stream ids give statistically
/// independent streams, so concurrent units each own one.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id}, counter_{0, 0, 0, 0}, index_(kBlock) {}

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream_id() const { return key_[1]; }

  /// Next raw 64-bit word.
  std::uint64_t next_u64() {
    if (index_ == kBlock) refill();
    return buffer_[index_++];
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal draw (Box-Muller, second value of each pair cached).
  double normal();

 private:
  static constexpr int kBlock = 4;

  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  int index_;
  std::optional<double> spare_normal_;
};

}  // namespace cutapprox::rng

#endif
