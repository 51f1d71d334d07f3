#pragma once

#include <optional>
#include <vector>

#include "mismine/dataset.hpp"
#include "mismine/queries.hpp"

namespace mismine::oracle {

// Brute-force reference enumerators. They evaluate the raw definitions by
// scanning the per-transaction item lists; they never read the bit-vector
// covers and never run the search engine, so they can check both.

struct OracleLimit {
    int max_items = 25;  // refuse enumeration beyond 2^max_items subsets
};

using Itemset = std::vector<Item>;        // ascending dense indices
using PatternSet = std::vector<Itemset>;  // a k-tuple of itemsets

// freq(P), recomputed from the transaction lists.
int frequency(const TransactionDataset& ds, const Itemset& p);

// Nonempty P with freq(P) >= min over P of s_i.
bool is_frequent(const TransactionDataset& ds, const MisProfile& mis, const Itemset& p);

// All nonempty frequent itemsets, ordered by (size, lex).
std::vector<Itemset> q0(const TransactionDataset& ds, const MisProfile& mis,
                        OracleLimit limit = {});

// Keeps itemsets whose pairwise MIS distances are <= ub (if given) and whose
// size is >= c (if given). Preserves order.
std::vector<Itemset> filter(const std::vector<Itemset>& itemsets, const MisProfile& mis,
                            std::optional<int> ub, std::optional<int> c);

// k-subsets of the ub/c-filtered frequent itemsets whose members are pairwise
// disjoint (Disjoint mode) or pairwise unequal (Distinct mode). With
// ordered_tuples, every permutation of each qualifying subset is produced.
std::vector<PatternSet> q3(const TransactionDataset& ds, const MisProfile& mis, int k, int ub,
                           int c, Q3Mode mode, bool ordered_tuples = false,
                           OracleLimit limit = {.max_items = 10});

}  // namespace mismine::oracle
