#pragma once

#include <cstdint>
#include <limits>

namespace leodoppler {

/// Counter-based SplitMix64 stream keyed by (seed, stream id). Two streams
/// with different ids are statistically independent, and the n-th draw of a
/// stream depends only on (seed, stream, n), which makes parallel Monte
/// Carlo reproducible regardless of how trials are scheduled.
///
/// Satisfies UniformRandomBitGenerator.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on [0, 1) from the top 53 bits; identical on every platform.
  double uniform();

 private:
  std::uint64_t state_;
};

}  // namespace leodoppler
