#pragma once

#include <cstdint>

#include "mismine/dataset.hpp"

namespace mismine {

// 64-bit linear congruential generator,
//   state <- state * 6364136223846793005 + 1442695040888963407
// (Knuth's MMIX constants). uniform01 takes the top 53 bits, uniform_int
// reduces bits 33..63 modulo the range. Fixed here so verification runs
// reproduce bit-for-bit across builds.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>((next() >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t state_;
};

// Per-trial stream: seed XOR (0x9E3779B97F4A7C15 * (trial + 1)).
inline Lcg trial_rng(std::uint64_t seed, int trial) {
    return Lcg(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1)));
}

// items x transactions 0/1 matrix; each cell set with probability `density`,
// drawn row-major (transaction by transaction, item by item). Labels are
// 1..items; zero-frequency items stay in the universe.
TransactionDataset random_dataset(Lcg& rng, int items, int transactions, double density);

// Supports uniform in [1, max_support].
MisProfile random_profile(Lcg& rng, int items, int max_support);

}  // namespace mismine
