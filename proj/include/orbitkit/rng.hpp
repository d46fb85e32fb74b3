#pragma once

#include <complex>
#include <cstdint>

namespace orbitkit {

/**
 * Deterministic random stream built on the splitmix64 mixer.
 *
 * All draws are derived from raw 64-bit outputs with fixed arithmetic, so a
 * given seed produces the same sequence on every platform (std:: distributions
 * are implementation-defined and are deliberately not used). Campaigns split
 * one master seed into independent per-sample streams via for_sample(), which
 * makes serial and parallel runs produce identical sample sets.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent substream for sample `index` of a campaign seeded with `seed`.
    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed) ^ mix(0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Fair coin.
    bool coin() { return (next_u64() >> 63) != 0; }

    /// Uniform index in [0, n). Modulo bias is irrelevant at test scales.
    std::uint32_t uniform_index(std::uint32_t n) {
        return static_cast<std::uint32_t>(next_u64() % n);
    }

    /// Uniform complex number in the centered square of half-width `h`.
    std::complex<double> square_complex(double h) {
        double re = uniform(-h, h);
        double im = uniform(-h, h);
        return {re, im};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace orbitkit
