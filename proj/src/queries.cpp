#include "mismine/queries.hpp"

#include <stdexcept>

namespace mismine {

void validate(const QuerySpec& spec) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    if (spec.ub && *spec.ub < 0) throw std::invalid_argument("ub must be >= 0");
    if (spec.card && *spec.card < 0) throw std::invalid_argument("card must be >= 0");
    switch (spec.kind) {
        case QueryKind::Q0: break;
        case QueryKind::Q1: need(spec.ub.has_value(), "q1 requires ub"); break;
        case QueryKind::Q2:
            need(spec.ub.has_value(), "q2 requires ub");
            need(spec.card.has_value(), "q2 requires card");
            break;
        case QueryKind::Q3:
            need(spec.k.has_value(), "q3 requires k");
            need(!spec.k || *spec.k >= 2, "q3 requires k >= 2");
            need(spec.ub.has_value(), "q3 requires ub");
            need(spec.card.has_value(), "q3 requires card");
            break;
    }
}

Model build_model(const TransactionDataset& ds, const MisProfile& mis, const QuerySpec& spec,
                  VarOrder order) {
    validate(spec);
    if (mis.size() != ds.item_count())
        throw std::invalid_argument("profile size does not match dataset");

    Model model;
    model.dataset = &ds;
    model.mis = &mis;
    model.order = order;
    model.blocks = spec.kind == QueryKind::Q3 ? *spec.k : 1;

    // heavy pruning first, cheap structural constraints after
    for (int b = 0; b < model.blocks; ++b)
        model.propagators.push_back(std::make_unique<FreqRare>(ds, mis, b));
    if (spec.kind != QueryKind::Q0)
        for (int b = 0; b < model.blocks; ++b)
            model.propagators.push_back(std::make_unique<DistanceMis>(mis, *spec.ub, b));
    if (spec.kind == QueryKind::Q2 || spec.kind == QueryKind::Q3)
        for (int b = 0; b < model.blocks; ++b)
            model.propagators.push_back(std::make_unique<MinCardinality>(*spec.card, b));
    if (spec.kind == QueryKind::Q3) {
        if (spec.mode == Q3Mode::Disjoint) {
            for (int p = 0; p < model.blocks; ++p)
                for (int q = p + 1; q < model.blocks; ++q)
                    model.propagators.push_back(std::make_unique<Disjoint>(p, q));
            if (spec.symmetry_breaking)
                for (int b = 0; b + 1 < model.blocks; ++b)
                    model.propagators.push_back(std::make_unique<LexLess>(b, b + 1, true));
        } else {
            // a strict lex chain makes the blocks pairwise distinct and
            // canonically ordered at once
            for (int b = 0; b + 1 < model.blocks; ++b)
                model.propagators.push_back(std::make_unique<LexLess>(b, b + 1, true));
        }
    }
    return model;
}

QueryResult solve_query(const TransactionDataset& ds, const MisProfile& mis,
                        const QuerySpec& spec, VarOrder order) {
    Model model = build_model(ds, mis, spec, order);
    QueryResult result;
    result.solutions = collect_solutions(model, &result.stats);
    return result;
}

SearchStats solve_query(const TransactionDataset& ds, const MisProfile& mis,
                        const QuerySpec& spec, const SolutionSink& sink, VarOrder order) {
    return search(build_model(ds, mis, spec, order), sink);
}

}  // namespace mismine
