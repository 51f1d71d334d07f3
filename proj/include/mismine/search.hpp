#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mismine/propagators.hpp"

namespace mismine {

// minMis branches on the unfixed variable with the smallest minimum item
// support, ties broken by (block, item). Lex takes the first unfixed
// variable in (block, item) order.
enum class VarOrder { MinMis, Lex };

struct Model {
    const TransactionDataset* dataset = nullptr;
    const MisProfile* mis = nullptr;
    int blocks = 1;
    std::vector<std::unique_ptr<Propagator>> propagators;
    VarOrder order = VarOrder::MinMis;
    bool emit_empty = false;  // whether the all-zero assignment counts as a solution
};

// One itemset per block, as ascending original labels.
struct Solution {
    std::vector<std::vector<Label>> itemsets;
    friend bool operator==(const Solution&, const Solution&) = default;
};

struct SearchStats {
    long long solutions = 0;
    long long nodes = 0;  // branching decisions applied
    long long fails = 0;  // failure returns from propagation
    std::chrono::duration<double> elapsed{0.0};

    double elapsed_ms() const { return elapsed.count() * 1000.0; }
};

using SolutionSink = std::function<void(const Solution&)>;

// Runs every propagator, repeating full passes until none changes a domain
// or one fails. Changed/Stable report whether any pass changed anything.
PropagationResult propagate_fixpoint(const Model& model, SearchState& state);

// Next variable to branch on per model.order, or nullopt when all are fixed.
std::optional<Var> select_variable(const Model& model, const SearchState& state);

// Depth-first enumeration, value 1 before value 0, propagating at every node.
// Solutions stream to `sink` in a deterministic order; pass {} to count only.
SearchStats search(const Model& model, const SolutionSink& sink = {});

// Convenience: collect the full solution list.
std::vector<Solution> collect_solutions(const Model& model, SearchStats* stats = nullptr);

}  // namespace mismine
