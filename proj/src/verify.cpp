#include "mismine/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mismine/oracle.hpp"

namespace mismine {

namespace {

using oracle::Itemset;
using oracle::PatternSet;

Itemset to_dense(const TransactionDataset& ds, const std::vector<Label>& labels) {
    Itemset p;
    p.reserve(labels.size());
    for (Label id : labels) p.push_back(*ds.index_of(id));
    std::sort(p.begin(), p.end());
    return p;
}

bool canonical_less(const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string render(const TransactionDataset& ds, const Itemset& p) {
    std::vector<Label> labels;
    for (Item i : p) labels.push_back(ds.label(i));
    std::sort(labels.begin(), labels.end());
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
    out << '}';
    return out.str();
}

std::string render(const TransactionDataset& ds, const PatternSet& tuple) {
    std::ostringstream out;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        out << (i ? " | " : "") << render(ds, tuple[i]);
    return out.str();
}

// first element of `a` not in `b` under a sorted-list diff; lists may hold
// duplicates, which count
template <class T>
std::optional<T> first_missing(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

}  // namespace

std::string describe(const QuerySpec& spec) {
    std::ostringstream out;
    switch (spec.kind) {
        case QueryKind::Q0: out << "q0"; break;
        case QueryKind::Q1: out << "q1"; break;
        case QueryKind::Q2: out << "q2"; break;
        case QueryKind::Q3: out << "q3"; break;
    }
    if (spec.ub) out << " ub=" << *spec.ub;
    if (spec.card) out << " card=" << *spec.card;
    if (spec.k) out << " k=" << *spec.k;
    if (spec.kind == QueryKind::Q3) {
        out << " mode=" << (spec.mode == Q3Mode::Disjoint ? "disjoint" : "distinct");
        if (spec.mode == Q3Mode::Disjoint)
            out << " symbreak=" << (spec.symmetry_breaking ? "on" : "off");
    }
    return out.str();
}

std::optional<std::string> compare_with_oracle(const TransactionDataset& ds,
                                               const MisProfile& mis, const QuerySpec& spec,
                                               VarOrder order, SearchStats* stats_out) {
    validate(spec);
    QueryResult result = solve_query(ds, mis, spec, order);
    if (stats_out) *stats_out = result.stats;

    if (spec.kind != QueryKind::Q3) {
        std::vector<Itemset> engine;
        engine.reserve(result.solutions.size());
        for (const auto& sol : result.solutions) engine.push_back(to_dense(ds, sol.itemsets[0]));
        std::sort(engine.begin(), engine.end());

        std::vector<Itemset> expected = oracle::q0(ds, mis);
        if (spec.kind != QueryKind::Q0)
            expected = oracle::filter(expected, mis, spec.ub, spec.card);
        std::sort(expected.begin(), expected.end());

        if (engine == expected) return std::nullopt;
        std::ostringstream out;
        out << "engine found " << engine.size() << " itemsets, oracle " << expected.size();
        if (auto extra = first_missing(engine, expected))
            out << "; engine-only: " << render(ds, *extra);
        if (auto missing = first_missing(expected, engine))
            out << "; oracle-only: " << render(ds, *missing);
        return out.str();
    }

    bool ordered = spec.mode == Q3Mode::Disjoint && !spec.symmetry_breaking;
    auto normalize = [&](PatternSet tuple) {
        for (auto& p : tuple) std::sort(p.begin(), p.end());
        if (!ordered) std::sort(tuple.begin(), tuple.end(), canonical_less);
        return tuple;
    };

    std::vector<PatternSet> engine;
    engine.reserve(result.solutions.size());
    for (const auto& sol : result.solutions) {
        PatternSet tuple;
        for (const auto& labels : sol.itemsets) tuple.push_back(to_dense(ds, labels));
        engine.push_back(normalize(std::move(tuple)));
    }
    std::sort(engine.begin(), engine.end());

    std::vector<PatternSet> expected =
        oracle::q3(ds, mis, *spec.k, *spec.ub, *spec.card, spec.mode, ordered);
    for (auto& tuple : expected) tuple = normalize(std::move(tuple));
    std::sort(expected.begin(), expected.end());

    if (engine == expected) return std::nullopt;
    std::ostringstream out;
    out << "engine found " << engine.size() << " pattern sets, oracle " << expected.size();
    if (auto extra = first_missing(engine, expected))
        out << "; engine-only: " << render(ds, *extra);
    if (auto missing = first_missing(expected, engine))
        out << "; oracle-only: " << render(ds, *missing);
    return out.str();
}

VerifyOutcome run_verify(const VerifyParams& params) {
    VerifyOutcome outcome;
    for (int trial = 0; trial < params.trials; ++trial) {
        Lcg rng = trial_rng(params.seed, trial);
        TransactionDataset ds =
            random_dataset(rng, params.items, params.transactions, params.density);
        MisProfile mis = random_profile(rng, params.items, params.transactions);

        QuerySpec spec = params.spec;
        int spread = mis.max() - mis.min();
        if (spec.kind != QueryKind::Q0 && !spec.ub) spec.ub = rng.uniform_int(0, spread);
        if ((spec.kind == QueryKind::Q2 || spec.kind == QueryKind::Q3) && !spec.card)
            spec.card = rng.uniform_int(1, std::min(4, params.items));
        if (spec.kind == QueryKind::Q3 && !spec.k) spec.k = rng.uniform_int(2, 3);

        SearchStats stats;
        auto diff = compare_with_oracle(ds, mis, spec, params.order, &stats);
        outcome.trials_run = trial + 1;
        outcome.total_solutions += stats.solutions;
        outcome.total_fails += stats.fails;
        if (diff) {
            std::ostringstream mis_text;
            write_mis(mis_text, mis, ds);
            outcome.mismatch = VerifyMismatch{trial, describe(spec), ds.serialize_fimi(),
                                              mis_text.str(), *diff};
            return outcome;
        }
    }
    return outcome;
}

}  // namespace mismine
