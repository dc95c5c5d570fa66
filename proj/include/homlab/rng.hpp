#pragma once

#include <cstdint>
#include <random>

namespace homlab {

// Seeded PRNG for all randomized corpora. Wraps std::mt19937_64 (whose
// output sequence is pinned by the standard) and draws bounded values
// by rejection, so runs are bit-reproducible across platforms. Never
// use std::uniform_int_distribution here: its mapping is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    int below(int n)
    {
        auto bound = static_cast<std::uint64_t>(n);
        std::uint64_t limit = ~0ull - (~0ull % bound);
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return static_cast<int>(x % bound);
    }

    bool coin() { return eng_() & 1; }

    // true with probability num/den
    bool chance(int num, int den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

}
