#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mismine {

struct BenchRow {
    int items = 0;
    int transactions = 0;
    double ns_per_node = 0.0;  // one propagation pass over the root state

    long long cells() const { return static_cast<long long>(items) * transactions; }
};

// The default sweep spans a 10x growth in items x transactions.
std::vector<std::pair<int, int>> default_bench_sizes();

// Measures the frequency propagator's per-node cost on synthetic datasets:
// for each size, the root-state fixpoint of a Q0 model is timed over
// repeated calls (best batch average). Density 0.3, supports 1, so a pass
// touches every item with one cover intersection and prunes nothing.
std::vector<BenchRow> bench_sweep(const std::vector<std::pair<int, int>>& sizes,
                                  std::uint64_t seed = 7);

inline std::vector<BenchRow> bench_sweep() { return bench_sweep(default_bench_sizes()); }

}  // namespace mismine
