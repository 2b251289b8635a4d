#pragma once

#include <cstdint>

#include "qhahn/rational.hpp"

namespace test_support {

// Small deterministic generator (xorshift64*) so every randomized test prints
// and reuses a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    qhahn::Rational small_rational() {
        long num = range(-9, 9);
        long den = range(1, 9);
        return {num, den};
    }

    qhahn::Rational small_nonzero() {
        while (true) {
            auto r = small_rational();
            if (!r.is_zero()) return r;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace test_support
