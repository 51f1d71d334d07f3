#include "mismine/state.hpp"

#include <cassert>

namespace mismine {

SearchState::SearchState(const TransactionDataset& ds, int blocks)
    : ds_(&ds),
      n_(ds.item_count()),
      dom_(blocks, std::vector<VarState>(n_, VarState::Unfixed)),
      cover_(blocks, TidSet(ds.transaction_count(), /*full=*/true)),
      n1_(blocks, 0),
      n0_(blocks, 0) {
    assert(blocks >= 1);
}

bool SearchState::all_fixed() const {
    for (int b = 0; b < blocks(); ++b)
        if (!all_fixed(b)) return false;
    return true;
}

std::vector<Item> SearchState::fixed1_items(int block) const {
    std::vector<Item> out;
    out.reserve(n1_[block]);
    for (Item i = 0; i < n_; ++i)
        if (dom_[block][i] == VarState::Fixed1) out.push_back(i);
    return out;
}

void SearchState::fix(int block, Item i, bool value) {
    assert(dom_[block][i] == VarState::Unfixed);
    if (value) {
        saved_.push_back({block, cover_[block]});
        cover_[block].intersect_with(ds_->item_cover(i));
        dom_[block][i] = VarState::Fixed1;
        ++n1_[block];
    } else {
        dom_[block][i] = VarState::Fixed0;
        ++n0_[block];
    }
    trail_.push_back({block, i});
}

void SearchState::push_level() { marks_.push_back({trail_.size(), saved_.size()}); }

void SearchState::pop_level() {
    assert(!marks_.empty());
    LevelMark mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark.trail) {
        auto [block, item] = trail_.back();
        trail_.pop_back();
        if (dom_[block][item] == VarState::Fixed1)
            --n1_[block];
        else
            --n0_[block];
        dom_[block][item] = VarState::Unfixed;
    }
    // restore newest-first so the oldest snapshot (the cover at level entry) wins
    while (saved_.size() > mark.covers) {
        cover_[saved_.back().block] = std::move(saved_.back().bits);
        saved_.pop_back();
    }
}

}  // namespace mismine
