#include "mismine/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace mismine {

PropagationResult propagate_fixpoint(const Model& model, SearchState& state) {
    bool any_change = false;
    for (;;) {
        bool changed = false;
        for (const auto& p : model.propagators) {
            switch (p->propagate(state)) {
                case PropagationResult::Failure: return PropagationResult::Failure;
                case PropagationResult::Changed: changed = true; break;
                case PropagationResult::Stable: break;
            }
        }
        if (!changed) break;
        any_change = true;
    }
    return any_change ? PropagationResult::Changed : PropagationResult::Stable;
}

std::optional<Var> select_variable(const Model& model, const SearchState& state) {
    if (model.order == VarOrder::Lex) {
        for (int b = 0; b < state.blocks(); ++b)
            for (Item i = 0; i < state.items(); ++i)
                if (state.unfixed(b, i)) return Var{b, i};
        return std::nullopt;
    }
    // minMis: smallest support, ties by (block, item)
    std::optional<Var> best;
    int best_s = 0;
    for (int b = 0; b < state.blocks(); ++b) {
        for (Item i = 0; i < state.items(); ++i) {
            if (!state.unfixed(b, i)) continue;
            int s = (*model.mis)[i];
            if (!best || s < best_s) {
                best = Var{b, i};
                best_s = s;
            }
        }
    }
    return best;
}

namespace {

class Dfs {
public:
    Dfs(const Model& model, SearchState& state, SearchStats& stats, const SolutionSink& sink)
        : model_(model), state_(state), stats_(stats), sink_(sink) {}

    void run() {
        if (propagate_fixpoint(model_, state_) == PropagationResult::Failure) {
            ++stats_.fails;
            return;
        }
        if (state_.all_fixed()) {
            emit();
            return;
        }
        Var v = *select_variable(model_, state_);
        branch(v, true);
        branch(v, false);
    }

private:
    void branch(Var v, bool value) {
        state_.push_level();
        ++stats_.nodes;
        state_.fix(v.block, v.item, value);
        run();
        state_.pop_level();
    }

    void emit() {
        if (!model_.emit_empty)
            for (int b = 0; b < state_.blocks(); ++b)
                if (state_.fixed1_count(b) == 0) return;
        ++stats_.solutions;
        if (!sink_) return;
        Solution sol;
        sol.itemsets.resize(state_.blocks());
        for (int b = 0; b < state_.blocks(); ++b) {
            auto& labels = sol.itemsets[b];
            for (Item i : state_.fixed1_items(b)) labels.push_back(model_.dataset->label(i));
            std::sort(labels.begin(), labels.end());
        }
        sink_(sol);
    }

    const Model& model_;
    SearchState& state_;
    SearchStats& stats_;
    const SolutionSink& sink_;
};

}  // namespace

SearchStats search(const Model& model, const SolutionSink& sink) {
    if (!model.dataset || !model.mis) throw std::invalid_argument("model is missing data");
    if (model.blocks < 1) throw std::invalid_argument("model needs at least one block");
    if (model.mis->size() != model.dataset->item_count())
        throw std::invalid_argument("profile size does not match dataset");

    SearchStats stats;
    auto t0 = std::chrono::steady_clock::now();
    SearchState state(*model.dataset, model.blocks);
    Dfs(model, state, stats, sink).run();
    stats.elapsed = std::chrono::steady_clock::now() - t0;
    return stats;
}

std::vector<Solution> collect_solutions(const Model& model, SearchStats* stats) {
    std::vector<Solution> out;
    SearchStats st = search(model, [&out](const Solution& s) { out.push_back(s); });
    if (stats) *stats = st;
    return out;
}

}  // namespace mismine
