#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace em {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded generator used by everything stochastic in the project. The engine
// (mt19937_64) is bit-exact across platforms; the std <random> distributions
// are not, so sampling is done here with explicit rejection / Box-Muller.
// Child generators derive from the root seed by fixed splitting, which keeps
// experiment replicates independent and reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : root_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject_under = (-bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= reject_under) return r % bound;
        }
    }

    // Uniform double in [0, 1), 53 bits of mantissa.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return real() < p;
    }

    // Standard normal via Box-Muller, pair-cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - real();  // (0, 1]
        const double v = real();
        const double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(2.0 * M_PI * v);
        has_spare_ = true;
        return r * std::cos(2.0 * M_PI * v);
    }

    // Independent child stream; distinct `stream` values give distinct
    // generators regardless of how many draws the parent has made.
    Rng split(std::uint64_t stream) const {
        return Rng(splitmix64(root_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1))));
    }

    std::uint64_t root_seed() const { return root_; }

private:
    std::uint64_t root_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace em
