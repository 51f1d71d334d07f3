#pragma once

#include "mismine/dataset.hpp"
#include "mismine/state.hpp"

namespace mismine {

enum class PropagationResult { Failure, Changed, Stable };

class Propagator {
public:
    virtual ~Propagator() = default;

    // Narrows domains in `state`. Failure means the current partial
    // assignment cannot extend to anything satisfying this constraint.
    // Changed is returned only when at least one domain was narrowed.
    virtual PropagationResult propagate(SearchState& state) const = 0;
};

// Global frequency constraint under multiple minimum item supports: once the
// block is fully fixed, a nonempty P must satisfy freq(P) >= min over P of
// s_i. Filtering: with s = min over P-union-U of s_i, fail when
// |cover(P)| < s, otherwise drop value 1 from every unfixed i whose
// |cover(P) & cover(i)| < s. Only value 1 is ever pruned.
class FreqRare final : public Propagator {
public:
    FreqRare(const TransactionDataset& ds, const MisProfile& mis, int block = 0)
        : ds_(&ds), mis_(&mis), block_(block) {}

    PropagationResult propagate(SearchState& state) const override;

private:
    const TransactionDataset* ds_;
    const MisProfile* mis_;
    int block_;
};

// |s_i - s_j| <= ub for every pair of included items. Prunes value 1 from
// unfixed items too far from some fixed-1 item; never prunes value 0.
class DistanceMis final : public Propagator {
public:
    DistanceMis(const MisProfile& mis, int ub, int block = 0);

    PropagationResult propagate(SearchState& state) const override;

private:
    const MisProfile* mis_;
    int ub_;
    int block_;
};

// At least `min_size` items set to 1 in the block.
class MinCardinality final : public Propagator {
public:
    MinCardinality(int min_size, int block = 0);

    PropagationResult propagate(SearchState& state) const override;

private:
    int min_size_;
    int block_;
};

// The two blocks share no item fixed to 1 in both.
class Disjoint final : public Propagator {
public:
    Disjoint(int block_p, int block_q);

    PropagationResult propagate(SearchState& state) const override;

private:
    int p_, q_;
};

// Block p's 0/1 vector lexicographically below block q's. Checked once both
// blocks are fully fixed; no earlier pruning.
class LexLess final : public Propagator {
public:
    LexLess(int block_p, int block_q, bool strict);

    PropagationResult propagate(SearchState& state) const override;

private:
    int p_, q_;
    bool strict_;
};

}  // namespace mismine
