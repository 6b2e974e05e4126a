#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mei {

// Deterministic random stream. Wraps std::mt19937_64 but derives all
// variates from raw engine output so that seeded runs produce identical
// streams on every standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n). Modulo bias is below 1e-18 for any n
    // that fits in 60 bits.
    std::uint64_t uniform_int(std::uint64_t n) {
        return engine_() % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = uniform_int(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mei
