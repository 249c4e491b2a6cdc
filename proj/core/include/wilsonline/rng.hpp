#pragma once

#include "wilsonline/rational.hpp"

#include <cstdint>
#include <random>

namespace wilsonline {

// Deterministic source of small random rationals; all verification randomness
// flows through an explicit seed so runs are reproducible.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : eng_(seed) {}
    static RatSampler for_trial(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{seed, trial + 1};
        std::mt19937_64 eng(seq);
        RatSampler s(0);
        s.eng_ = eng;
        return s;
    }

    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng_);
    }

    Rat rational(int max_abs = 4) {
        int num = uniform_int(-max_abs, max_abs);
        int den = uniform_int(1, max_abs);
        return Rat(num, den);
    }

    Rat nonzero_rational(int max_abs = 4) {
        Rat r;
        do {
            r = rational(max_abs);
        } while (r == 0);
        return r;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace wilsonline
