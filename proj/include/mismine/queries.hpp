#pragma once

#include <optional>

#include "mismine/search.hpp"

namespace mismine {

enum class QueryKind { Q0, Q1, Q2, Q3 };
enum class Q3Mode { Disjoint, Distinct };

// Q0: frequent itemsets under the MIS profile.
// Q1: Q0 plus pairwise MIS distance <= ub.
// Q2: Q1 plus itemset size >= card.
// Q3: k itemsets, each satisfying Q2, jointly pairwise disjoint (formula
//     reading) or merely pairwise distinct (prose reading).
struct QuerySpec {
    QueryKind kind = QueryKind::Q0;
    std::optional<int> ub;
    std::optional<int> card;
    std::optional<int> k;  // >= 2
    Q3Mode mode = Q3Mode::Disjoint;
    bool symmetry_breaking = true;  // disjoint mode only; distinct always orders blocks
};

// Throws std::invalid_argument when required parameters are missing or bad.
void validate(const QuerySpec& spec);

Model build_model(const TransactionDataset& ds, const MisProfile& mis, const QuerySpec& spec,
                  VarOrder order = VarOrder::MinMis);

struct QueryResult {
    std::vector<Solution> solutions;
    SearchStats stats;
};

QueryResult solve_query(const TransactionDataset& ds, const MisProfile& mis,
                        const QuerySpec& spec, VarOrder order = VarOrder::MinMis);
SearchStats solve_query(const TransactionDataset& ds, const MisProfile& mis,
                        const QuerySpec& spec, const SolutionSink& sink,
                        VarOrder order = VarOrder::MinMis);

}  // namespace mismine
