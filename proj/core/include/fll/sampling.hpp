#pragma once

#include <cstdint>
#include <random>

#include "fll/rational.hpp"

namespace fll {

/// Seeded pseudo-random source. Draws are derived from raw mt19937_64 output
/// rather than <random> distributions so that a given seed produces the same
/// stream on every standard library.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  /// Uniform rational p/q with |p| <= max_num and the given denominator.
  Rational rational(long max_num, long denominator) {
    return Rational(uniform_int(-max_num, max_num), denominator);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fll
