#include "mismine/bench.hpp"

#include <algorithm>
#include <chrono>

#include "mismine/queries.hpp"
#include "mismine/synth.hpp"

namespace mismine {

std::vector<std::pair<int, int>> default_bench_sizes() {
    // 8192 cells up to 81920: a 10x sweep of items x transactions
    return {{32, 256}, {64, 256}, {64, 512}, {128, 512}, {128, 640}};
}

namespace {

double time_root_propagation(const Model& model, SearchState& state) {
    using clock = std::chrono::steady_clock;
    // calibrate the repetition count for a measurable batch
    int reps = 64;
    {
        auto t0 = clock::now();
        for (int r = 0; r < reps; ++r) propagate_fixpoint(model, state);
        double per_call = std::chrono::duration<double>(clock::now() - t0).count() / reps;
        reps = std::clamp(static_cast<int>(8e-3 / std::max(per_call, 1e-9)), 64, 200000);
    }
    double best = 0.0;
    for (int batch = 0; batch < 5; ++batch) {
        auto t0 = clock::now();
        for (int r = 0; r < reps; ++r) propagate_fixpoint(model, state);
        double per_call = std::chrono::duration<double>(clock::now() - t0).count() / reps;
        if (batch == 0 || per_call < best) best = per_call;
    }
    return best * 1e9;
}

}  // namespace

std::vector<BenchRow> bench_sweep(const std::vector<std::pair<int, int>>& sizes,
                                  std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (auto [n, m] : sizes) {
        Lcg rng(seed);
        TransactionDataset ds = random_dataset(rng, n, m, 0.3);
        MisProfile mis = MisProfile::uniform(n, 1);
        Model model = build_model(ds, mis, QuerySpec{.kind = QueryKind::Q0});
        SearchState state(ds, 1);
        // settle once: zero-frequency items get pruned here, after which
        // every timed call is a pure full pass
        propagate_fixpoint(model, state);
        rows.push_back({n, m, time_root_propagation(model, state)});
    }
    return rows;
}

}  // namespace mismine
