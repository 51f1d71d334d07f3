#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mismine/queries.hpp"
#include "mismine/synth.hpp"

namespace mismine {

// Randomized engine-vs-oracle equivalence harness (the CLI `verify` command
// and the acceptance suite are built on it).

struct VerifyParams {
    int items = 8;
    int transactions = 30;
    double density = 0.4;
    int trials = 100;
    std::uint64_t seed = 1;
    QuerySpec spec;  // ub/card/k left empty are drawn per trial
    VarOrder order = VarOrder::MinMis;
};

struct VerifyMismatch {
    int trial = 0;
    std::string query;
    std::string dataset_fimi;
    std::string mis_text;
    std::string detail;
};

struct VerifyOutcome {
    int trials_run = 0;
    long long total_solutions = 0;
    long long total_fails = 0;
    std::optional<VerifyMismatch> mismatch;

    bool ok() const { return !mismatch.has_value(); }
};

// Solves `spec` on one instance with both the engine and the oracle and
// compares the solution sets exactly (duplicates included). Returns a
// human-readable first difference, or nullopt when they agree.
std::optional<std::string> compare_with_oracle(const TransactionDataset& ds,
                                               const MisProfile& mis, const QuerySpec& spec,
                                               VarOrder order = VarOrder::MinMis,
                                               SearchStats* stats_out = nullptr);

VerifyOutcome run_verify(const VerifyParams& params);

std::string describe(const QuerySpec& spec);

}  // namespace mismine
