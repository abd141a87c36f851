#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

namespace walab {

/// Counter-based deterministic generator (splitmix64). A stream is fully
/// determined by its 64-bit state seed; independent streams are derived by
/// hashing the root seed together with integer tags, so replicate-level
/// results never depend on scheduling order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static const char* name() { return "splitmix64"; }

  /// Derives a child stream seed from (seed, tags...) by iterated mixing.
  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> tags);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (caches the spare deviate).
  double normal();

  /// Uniform index in [0, n).
  std::uint64_t index(std::uint64_t n);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace walab
