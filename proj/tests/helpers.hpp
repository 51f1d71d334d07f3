#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mismine/oracle.hpp"
#include "mismine/queries.hpp"

namespace testutil {

using namespace mismine;

// the running example: items A,B,C,D encoded as 1,2,3,4
inline const char* kTable1Fimi = "1 2 4\n1 3 4\n1 2 3 4\n2 3\n1 2 3\n";
inline const char* kTable1Mis = "1 4\n2 3\n3 3\n4 1\n";

inline constexpr Label A = 1, B = 2, C = 3, D = 4;

inline TransactionDataset table1() { return TransactionDataset::parse_fimi(kTable1Fimi); }

inline MisProfile table1_mis(const TransactionDataset& ds) {
    std::istringstream in(kTable1Mis);
    return read_mis(in, ds);
}

using LabelSet = std::vector<Label>;

inline std::set<LabelSet> label_sets(const std::vector<Solution>& solutions, int block = 0) {
    std::set<LabelSet> out;
    for (const auto& sol : solutions) out.insert(sol.itemsets[block]);
    return out;
}

inline std::set<LabelSet> to_labels(const TransactionDataset& ds,
                                    const std::vector<oracle::Itemset>& itemsets) {
    std::set<LabelSet> out;
    for (const auto& p : itemsets) {
        LabelSet labels;
        for (Item i : p) labels.push_back(ds.label(i));
        std::sort(labels.begin(), labels.end());
        out.insert(labels);
    }
    return out;
}

inline std::vector<Item> dense(const TransactionDataset& ds, const LabelSet& labels) {
    std::vector<Item> out;
    for (Label id : labels) out.push_back(*ds.index_of(id));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
