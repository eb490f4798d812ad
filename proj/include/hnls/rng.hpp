#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace hnls {

/// Deterministic counter-friendly RNG (splitmix64). Used everywhere instead
/// of std distributions so that streams are identical across platforms and
/// standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (two uniforms per pair).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        while (u1 <= 0.0) u1 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Complex standard normal, E|z|^2 = 1.
    std::complex<double> next_complex_normal() {
        const double s = 0.7071067811865475244; // 1/sqrt(2)
        const double re = next_normal();
        const double im = next_normal();
        return {s * re, s * im};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Derives the seed of task stream `index` from a 64-bit root seed.
/// Stream k is splitmix64 seeded with mix(root, k); parallel and sequential
/// schedules therefore draw identical values for the same task index.
inline std::uint64_t task_seed(std::uint64_t root_seed, std::uint64_t index) {
    SplitMix64 mixer(root_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return mixer.next_u64();
}

} // namespace hnls
