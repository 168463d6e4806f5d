#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace taxoflow {

// Deterministic generator with named sub-streams derived from one master
// seed. Everything random in the pipeline draws from this, so a run is
// reproducible bit-for-bit on any platform (no stdlib distributions).
class Rng {
public:
    Rng(uint64_t seed, std::string_view stream) {
        uint64_t h = 1469598103934665603ull;  // FNV-1a over the stream name
        for (char c : stream) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        state_ = seed ^ h;
        next();  // decorrelate nearby seeds
    }

    uint64_t next() {  // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform in [0, n). n must be > 0.
    size_t index(size_t n) {
        return static_cast<size_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    long long uniform_int(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(index(static_cast<size_t>(hi - lo + 1)));
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586 * u2);
    }

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace taxoflow
