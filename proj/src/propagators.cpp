#include "mismine/propagators.hpp"

#include <limits>
#include <stdexcept>

namespace mismine {

namespace {

constexpr int kNoThreshold = std::numeric_limits<int>::max();

// min s_i over the block's fixed-1 and unfixed items; kNoThreshold when none
int threshold(const SearchState& st, const MisProfile& mis, int block) {
    int s = kNoThreshold;
    for (Item i = 0; i < st.items(); ++i)
        if (st.domain(block, i) != VarState::Fixed0 && mis[i] < s) s = mis[i];
    return s;
}

}  // namespace

PropagationResult FreqRare::propagate(SearchState& st) const {
    const TidSet& cov = st.cover(block_);
    const int cov_size = cov.count();
    bool changed = false;
    int s = threshold(st, *mis_, block_);
    // Pruning can raise the threshold (all of its holders dropped from U);
    // re-filter until it settles so one call leaves nothing for a second.
    for (;;) {
        if (s == kNoThreshold) break;  // all-zero assignment: nothing to enforce
        if (cov_size < s) return PropagationResult::Failure;
        bool pruned = false;
        for (Item i = 0; i < st.items(); ++i) {
            if (!st.unfixed(block_, i)) continue;
            if (cov.intersect_count(ds_->item_cover(i)) < s) {
                st.fix(block_, i, false);
                pruned = true;
            }
        }
        if (!pruned) break;
        changed = true;
        int raised = threshold(st, *mis_, block_);
        if (raised == s) break;
        s = raised;
    }
    return changed ? PropagationResult::Changed : PropagationResult::Stable;
}

DistanceMis::DistanceMis(const MisProfile& mis, int ub, int block)
    : mis_(&mis), ub_(ub), block_(block) {
    if (ub < 0) throw std::invalid_argument("distance bound must be >= 0");
}

PropagationResult DistanceMis::propagate(SearchState& st) const {
    int lo = std::numeric_limits<int>::max();  // min / max support over P
    int hi = std::numeric_limits<int>::min();
    for (Item i = 0; i < st.items(); ++i) {
        if (!st.fixed1(block_, i)) continue;
        lo = std::min(lo, (*mis_)[i]);
        hi = std::max(hi, (*mis_)[i]);
    }
    if (hi == std::numeric_limits<int>::min()) return PropagationResult::Stable;  // P empty
    if (hi - lo > ub_) return PropagationResult::Failure;
    // an unfixed j conflicts with some fixed-1 item iff s_j leaves [hi-ub, lo+ub]
    bool changed = false;
    for (Item i = 0; i < st.items(); ++i) {
        if (!st.unfixed(block_, i)) continue;
        int s = (*mis_)[i];
        if (s < hi - ub_ || s > lo + ub_) {
            st.fix(block_, i, false);
            changed = true;
        }
    }
    return changed ? PropagationResult::Changed : PropagationResult::Stable;
}

MinCardinality::MinCardinality(int min_size, int block) : min_size_(min_size), block_(block) {
    if (min_size < 0) throw std::invalid_argument("minimum cardinality must be >= 0");
}

PropagationResult MinCardinality::propagate(SearchState& st) const {
    int available = st.fixed1_count(block_) + st.unfixed_count(block_);
    if (available < min_size_) return PropagationResult::Failure;
    if (available == min_size_ && st.unfixed_count(block_) > 0) {
        for (Item i = 0; i < st.items(); ++i)
            if (st.unfixed(block_, i)) st.fix(block_, i, true);
        return PropagationResult::Changed;
    }
    return PropagationResult::Stable;
}

Disjoint::Disjoint(int block_p, int block_q) : p_(block_p), q_(block_q) {
    if (p_ == q_) throw std::invalid_argument("disjointness needs two distinct blocks");
}

PropagationResult Disjoint::propagate(SearchState& st) const {
    bool changed = false;
    for (Item i = 0; i < st.items(); ++i) {
        bool in_p = st.fixed1(p_, i);
        bool in_q = st.fixed1(q_, i);
        if (in_p && in_q) return PropagationResult::Failure;
        if (in_p && st.unfixed(q_, i)) {
            st.fix(q_, i, false);
            changed = true;
        } else if (in_q && st.unfixed(p_, i)) {
            st.fix(p_, i, false);
            changed = true;
        }
    }
    return changed ? PropagationResult::Changed : PropagationResult::Stable;
}

LexLess::LexLess(int block_p, int block_q, bool strict)
    : p_(block_p), q_(block_q), strict_(strict) {
    if (p_ == q_) throw std::invalid_argument("lex ordering needs two distinct blocks");
}

PropagationResult LexLess::propagate(SearchState& st) const {
    if (!st.all_fixed(p_) || !st.all_fixed(q_)) return PropagationResult::Stable;
    for (Item i = 0; i < st.items(); ++i) {
        bool vp = st.fixed1(p_, i);
        bool vq = st.fixed1(q_, i);
        if (vp != vq)
            return vp < vq ? PropagationResult::Stable : PropagationResult::Failure;
    }
    return strict_ ? PropagationResult::Failure : PropagationResult::Stable;
}

}  // namespace mismine
