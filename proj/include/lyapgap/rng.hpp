#pragma once

#include <cstdint>
#include <random>

namespace lyapgap {

/// mt19937_64 wrapper that converts raw engine output to doubles itself,
/// so streams are reproducible across standard-library implementations
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// uniform in [0, 1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// splitmix64 finalizer; used to derive independent per-sample streams
/// from (seed, index) so results do not depend on worker count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace lyapgap
