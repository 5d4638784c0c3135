#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace idas {

// Deterministic random source. Gaussian draws use an explicit Box-Muller so
// sequences depend only on the mt19937_64 stream, not on the standard
// library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed), seed_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Independent child stream; lets parallel consumers stay reproducible.
    Rng fork(uint64_t stream) const {
        uint64_t x = seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::mt19937_64 gen_;
    uint64_t seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace idas
