#pragma once

#include <cstdint>

#include "rkdisc/disc.hpp"

namespace rkdisc {

/// SplitMix64. Distribution code is written out by hand so that seeded runs
/// produce identical bytes on every platform (std:: distributions are
/// implementation defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform point with radius in [r_lo, r_hi].
  UnitDiscPoint disc_point(double r_lo, double r_hi) {
    const double r = uniform(r_lo, r_hi);
    const double theta = uniform(0.0, two_pi);
    return UnitDiscPoint::polar(r, theta);
  }

private:
  std::uint64_t state_;
};

}  // namespace rkdisc
