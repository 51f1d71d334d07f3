#include "mismine/synth.hpp"

#include <stdexcept>

namespace mismine {

TransactionDataset random_dataset(Lcg& rng, int items, int transactions, double density) {
    if (items < 1 || transactions < 1)
        throw std::invalid_argument("need at least one item and one transaction");
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");
    std::vector<std::vector<Item>> rows(transactions);
    for (int t = 0; t < transactions; ++t)
        for (Item i = 0; i < items; ++i)
            if (rng.bernoulli(density)) rows[t].push_back(i);
    return TransactionDataset::from_dense(items, std::move(rows));
}

MisProfile random_profile(Lcg& rng, int items, int max_support) {
    if (max_support < 1) throw std::invalid_argument("max_support must be >= 1");
    std::vector<int> s(items);
    for (int i = 0; i < items; ++i) s[i] = rng.uniform_int(1, max_support);
    return MisProfile(std::move(s));
}

}  // namespace mismine
