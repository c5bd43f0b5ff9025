#pragma once

#include <cstdint>
#include <random>

#include "bellforge/matrix.hpp"
#include "bellforge/vec.hpp"

namespace bellforge::testing {

// Deterministic helpers on top of the fully specified mt19937_64; the standard
// distributions are implementation-defined and would not be reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t integer(std::uint64_t bound) { return rng_() % bound; }

  UnitVec3 unit_vec3() {
    for (;;) {
      const double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
      const double n2 = x * x + y * y + z * z;
      if (n2 > 1e-6 && n2 <= 1.0) return UnitVec3::normalize(x, y, z);
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (double& v : m.data()) v = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bellforge::testing
