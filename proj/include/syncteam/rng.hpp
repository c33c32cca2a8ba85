#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace syncteam {

/// splitmix64 step, used to derive independent stream seeds from one seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seeded random stream. Stands on mt19937_64 (bit-stable by the standard)
/// with hand-rolled uniform/normal transforms so simulated recordings are
/// reproducible byte-for-byte for a given seed, independent of the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Derive a named substream; different salts give independent streams.
    static Rng stream(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
        return Rng(splitmix64(s));
    }

    /// Uniform in [0,1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    std::uint64_t bits() { return gen_(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace syncteam
