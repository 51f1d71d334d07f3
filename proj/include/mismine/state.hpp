#pragma once

#include <vector>

#include "mismine/dataset.hpp"

namespace mismine {

enum class VarState : unsigned char { Unfixed, Fixed0, Fixed1 };

struct Var {
    int block = 0;
    Item item = 0;
    friend bool operator==(const Var&, const Var&) = default;
};

// Search state over one or more blocks of n Boolean item variables.
// Domains only narrow (Unfixed -> Fixed0/Fixed1); undo works per level.
// Each block keeps cover(P) incrementally: fixing an item to 1 intersects
// the block cover with the item cover, trailing the previous bits.
class SearchState {
public:
    explicit SearchState(const TransactionDataset& ds, int blocks = 1);

    const TransactionDataset& dataset() const { return *ds_; }
    int blocks() const { return static_cast<int>(dom_.size()); }
    int items() const { return n_; }

    VarState domain(int block, Item i) const { return dom_[block][i]; }
    bool unfixed(int block, Item i) const { return dom_[block][i] == VarState::Unfixed; }
    bool fixed1(int block, Item i) const { return dom_[block][i] == VarState::Fixed1; }

    int fixed1_count(int block) const { return n1_[block]; }
    int fixed0_count(int block) const { return n0_[block]; }
    int unfixed_count(int block) const { return n_ - n1_[block] - n0_[block]; }
    bool all_fixed(int block) const { return unfixed_count(block) == 0; }
    bool all_fixed() const;

    // cover(P) of the block, maintained incrementally
    const TidSet& cover(int block) const { return cover_[block]; }

    std::vector<Item> fixed1_items(int block) const;

    // pre: variable is unfixed
    void fix(int block, Item i, bool value);

    int level() const { return static_cast<int>(marks_.size()); }
    void push_level();
    void pop_level();

private:
    struct TrailEntry {
        int block;
        Item item;
    };
    struct CoverSave {
        int block;
        TidSet bits;
    };
    struct LevelMark {
        std::size_t trail;
        std::size_t covers;
    };

    const TransactionDataset* ds_;
    int n_;
    std::vector<std::vector<VarState>> dom_;
    std::vector<TidSet> cover_;
    std::vector<int> n1_, n0_;
    std::vector<TrailEntry> trail_;
    std::vector<CoverSave> saved_;
    std::vector<LevelMark> marks_;
};

}  // namespace mismine
