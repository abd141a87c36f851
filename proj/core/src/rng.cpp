#include "walab/rng.hpp"

#include <cmath>

namespace walab {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t RngStream::derive(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = mix(seed + kGamma);
  for (std::uint64_t t : tags) h = mix(h ^ mix(t + kGamma));
  return h;
}

std::uint64_t RngStream::next_u64() {
  state_ += kGamma;
  return mix(state_);
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 6.283185307179586477 * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t RngStream::index(std::uint64_t n) {
  // Rejection-free modulo is fine here: n is tiny relative to 2^64.
  return next_u64() % n;
}

}  // namespace walab
