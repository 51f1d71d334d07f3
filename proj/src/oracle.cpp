#include "mismine/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mismine::oracle {

namespace {

using Mask = std::uint64_t;

constexpr int kMaxK = 3;

// transaction masks from the horizontal lists (not the covers)
std::vector<Mask> transaction_masks(const TransactionDataset& ds) {
    std::vector<Mask> masks(ds.transaction_count(), 0);
    for (int t = 0; t < ds.transaction_count(); ++t)
        for (Item i : ds.transactions()[t]) masks[t] |= Mask{1} << i;
    return masks;
}

int mask_frequency(const std::vector<Mask>& rows, Mask p) {
    int f = 0;
    for (Mask row : rows)
        if ((row & p) == p) ++f;
    return f;
}

Mask to_mask(const Itemset& p) {
    Mask m = 0;
    for (Item i : p) m |= Mask{1} << i;
    return m;
}

Itemset to_itemset(Mask m) {
    Itemset p;
    for (Item i = 0; m; ++i, m >>= 1)
        if (m & 1) p.push_back(i);
    return p;
}

int min_support(const MisProfile& mis, Mask p) {
    int s = std::numeric_limits<int>::max();
    for (Item i = 0; p; ++i, p >>= 1)
        if (p & 1) s = std::min(s, mis[i]);
    return s;
}

void check_guard(const TransactionDataset& ds, OracleLimit limit) {
    if (ds.item_count() > limit.max_items)
        throw std::invalid_argument("brute force refused: " + std::to_string(ds.item_count()) +
                                    " items exceed the guard of " +
                                    std::to_string(limit.max_items));
}

bool canonical_less(const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

int frequency(const TransactionDataset& ds, const Itemset& p) {
    int f = 0;
    for (const auto& row : ds.transactions())
        if (std::includes(row.begin(), row.end(), p.begin(), p.end())) ++f;
    return f;
}

bool is_frequent(const TransactionDataset& ds, const MisProfile& mis, const Itemset& p) {
    if (p.empty()) throw std::invalid_argument("itemsets are nonempty");
    int s = std::numeric_limits<int>::max();
    for (Item i : p) s = std::min(s, mis[i]);
    return frequency(ds, p) >= s;
}

std::vector<Itemset> q0(const TransactionDataset& ds, const MisProfile& mis, OracleLimit limit) {
    check_guard(ds, limit);
    if (mis.size() != ds.item_count())
        throw std::invalid_argument("profile size does not match dataset");
    const int n = ds.item_count();
    const auto rows = transaction_masks(ds);
    std::vector<Itemset> out;
    for (Mask p = 1; p < (Mask{1} << n); ++p)
        if (mask_frequency(rows, p) >= min_support(mis, p)) out.push_back(to_itemset(p));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Itemset> filter(const std::vector<Itemset>& itemsets, const MisProfile& mis,
                            std::optional<int> ub, std::optional<int> c) {
    std::vector<Itemset> out;
    for (const auto& p : itemsets) {
        if (c && static_cast<int>(p.size()) < *c) continue;
        if (ub) {
            int lo = std::numeric_limits<int>::max();
            int hi = std::numeric_limits<int>::min();
            for (Item i : p) {
                lo = std::min(lo, mis[i]);
                hi = std::max(hi, mis[i]);
            }
            if (!p.empty() && hi - lo > *ub) continue;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<PatternSet> q3(const TransactionDataset& ds, const MisProfile& mis, int k, int ub,
                           int c, Q3Mode mode, bool ordered_tuples, OracleLimit limit) {
    check_guard(ds, limit);
    if (k < 1 || k > kMaxK)
        throw std::invalid_argument("brute force refused: k must lie in [1, " +
                                    std::to_string(kMaxK) + "]");
    auto base = filter(q0(ds, mis, limit), mis, ub, c);
    std::vector<Mask> masks(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) masks[i] = to_mask(base[i]);

    auto compatible = [&](std::size_t a, std::size_t b) {
        return mode == Q3Mode::Disjoint ? (masks[a] & masks[b]) == 0 : masks[a] != masks[b];
    };

    std::vector<PatternSet> out;
    std::vector<std::size_t> pick;
    auto emit = [&]() {
        if (!ordered_tuples) {
            PatternSet tuple;
            for (std::size_t idx : pick) tuple.push_back(base[idx]);
            out.push_back(std::move(tuple));
            return;
        }
        std::vector<std::size_t> perm = pick;
        std::sort(perm.begin(), perm.end());
        do {
            PatternSet tuple;
            for (std::size_t idx : perm) tuple.push_back(base[idx]);
            out.push_back(std::move(tuple));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            emit();
            return;
        }
        for (std::size_t i = from; i < base.size(); ++i) {
            bool ok = true;
            for (std::size_t chosen : pick)
                if (!compatible(chosen, i)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mismine::oracle
