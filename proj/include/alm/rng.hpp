#pragma once

#include <cmath>
#include <cstdint>

namespace alm {

// splitmix64 generator. Small, fully specified, identical on every platform,
// so every seeded run of the harness and the generators is reproducible
// byte for byte.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be >= 1.
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

    // Uniform in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double p_true = 0.5) { return next_unit() < p_true; }

    // Standard normal via Box-Muller; deterministic under the seed.
    double next_gauss() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        while (u <= 0.0) u = next_unit();
        const double v = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Derives an independent stream seed from (seed, stream index); used to
    // make harness trials order-free and safely parallelizable.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        uint64_t z = seed ^ (stream + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace alm
