// rng.hpp — seeded random source with a pinned draw sequence so batch
// output and test fixtures reproduce bit-for-bit across standard
// libraries.
//
// Sequence contract: the engine is std::mt19937_64 seeded with the given
// 64-bit value. uniform() consumes one engine word and maps its top 53
// bits to [0,1). gaussian() draws a Box-Muller pair from two uniforms and
// caches the second value. exponential() is -log1p(-uniform()).
// uniform_int(n) maps one engine word by multiply-shift.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace wignerlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2.0 * std::log1p(-uniform()));
        double theta = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::complex<double> gaussian_complex() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    double exponential() { return -std::log1p(-uniform()); }

    // {0, ..., n-1}
    int uniform_int(int n) {
        return static_cast<int>((static_cast<unsigned __int128>(engine_()) * static_cast<unsigned>(n)) >> 64);
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wignerlab
