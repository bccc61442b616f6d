#ifndef MOEA_RNG_HPP
#define MOEA_RNG_HPP

#include <cstdint>
#include <random>

namespace moea {

/// Seeded random stream. Draws are derived from the raw mt19937_64 output
/// with fixed bit arithmetic, so a given seed produces the same sequence on
/// every platform. Distinct seeds give independent streams.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace moea

#endif
