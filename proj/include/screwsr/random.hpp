#pragma once

#include <cstdint>
#include <random>

namespace screwsr {

/// Seedable generator used for every fixture in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard, and doubles are formed from the top 53 bits of each draw, so a
/// seed reproduces the same numbers on any conforming implementation (unlike
/// the std:: distributions, whose algorithms are unspecified).
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace screwsr
