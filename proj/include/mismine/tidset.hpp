#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mismine {

// Bit vector over transaction ids. All TidSets derived from one dataset share
// the same universe size; bits past the universe stay zero.
class TidSet {
public:
    TidSet() = default;

    explicit TidSet(int universe, bool full = false)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (full) {
            for (auto& w : words_) w = ~std::uint64_t{0};
            trim();
        }
    }

    int universe() const { return universe_; }

    bool test(int tid) const { return (words_[tid >> 6] >> (tid & 63)) & 1u; }

    void set(int tid) { words_[tid >> 6] |= std::uint64_t{1} << (tid & 63); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // this &= other
    void intersect_with(const TidSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    }

    // |this & other| without materializing the intersection
    int intersect_count(const TidSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    std::vector<int> to_tids() const {
        std::vector<int> out;
        for (int t = 0; t < universe_; ++t)
            if (test(t)) out.push_back(t);
        return out;
    }

    friend bool operator==(const TidSet&, const TidSet&) = default;

private:
    void trim() {
        int tail = universe_ & 63;
        if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mismine
