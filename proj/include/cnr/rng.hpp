#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace cnr {

// splitmix64 with Box-Muller on top. The generator is spelled out here so
// seeded oracle runs reproduce exactly, independent of any standard-library
// distribution implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // standard complex Gaussian: independent N(0,1) real and imaginary parts
    std::complex<double> complex_normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    double normal() { return complex_normal().real(); }

private:
    std::uint64_t state_;
};

// Per-index stream derivation. Sharded sampling uses stream i for sample i,
// so results are identical regardless of how work is split across threads.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 s(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return s.next();
}

} // namespace cnr
