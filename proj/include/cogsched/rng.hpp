#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cogsched {

// Every random draw is produced by a generator keyed on (run seed, slot,
// stream), so any slot can be re-sampled in isolation and paired runs see
// identical noise regardless of what the controller did in between.
enum class RngStream : std::uint64_t {
  kChannelDirect = 0x11,
  kChannelCross = 0x22,
  kPuOccupancy = 0x33,
  kArrivals = 0x44,
};

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 with hand-rolled transforms: the engine's output sequence is
// pinned by the standard, while std distributions are not, and golden-file
// tests need bit-exact draws across toolchains.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t slot, RngStream stream)
      : engine_(mix64(mix64(mix64(seed) ^ slot) ^ static_cast<std::uint64_t>(stream))) {}

  explicit Rng(std::uint64_t raw_seed) : engine_(raw_seed) {}

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log argument.
  double uniform01_open_zero() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Exponential with the given mean; this is the power gain of a unit
  // Rayleigh fade scaled to `mean`.
  double exponential(double mean) { return -mean * std::log(uniform01_open_zero()); }

  // Standard normal via Box-Muller (one value per call).
  double normal() {
    const double u1 = uniform01_open_zero();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cogsched
