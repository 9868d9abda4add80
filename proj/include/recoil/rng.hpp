#pragma once

#include <cstdint>
#include <random>

#include "recoil/vec3.hpp"

namespace recoil {

// Deterministic generator for seeded test sampling. Uses mt19937_64 with an
// explicit 53-bit mapping instead of std::uniform_real_distribution, whose
// output is implementation-defined; streams are identical on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform direction: rejection sampling in the unit ball, then normalize
    Vec3 unit_vector() {
        for (;;) {
            const Vec3 v = {uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n2 = dot(v, v);
            if (n2 > 1e-4 && n2 <= 1.0) return v / std::sqrt(n2);
        }
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace recoil
