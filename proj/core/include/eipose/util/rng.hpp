#ifndef EIPOSE_UTIL_RNG_HPP
#define EIPOSE_UTIL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace eipose {

/// Seedable generator with fixed output transforms, so identical seeds give
/// identical streams on every platform (std::*_distribution is
/// implementation-defined and avoided on purpose).
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Derives an independent stream (for per-instance seeding).
    static uint64_t mix(uint64_t seed, uint64_t index) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace eipose

#endif
