#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mismine/tidset.hpp"

namespace mismine {

using Item = int;         // dense item index, 0..n-1
using Label = long long;  // original item id from the input file

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

struct DatasetStats {
    int transactions = 0;
    int items = 0;
    double avg_transaction_size = 0.0;
    double density = 0.0;  // avg_transaction_size / items
};

// Immutable transaction database. Two layouts are kept: per-item bit-vector
// covers (the propagators' working set) and plain per-transaction item lists
// (the reference paths scan these and deliberately never touch the covers).
// Transactions are a bag: duplicate lines stay; duplicate items inside one
// transaction collapse to one.
class TransactionDataset {
public:
    // FIMI format: one transaction per nonblank line, whitespace-separated
    // non-negative integer item ids. Ids are remapped to dense indices in
    // first-appearance order; the original ids are kept as labels.
    static TransactionDataset parse_fimi(std::istream& in);
    static TransactionDataset parse_fimi(const std::string& text);
    static TransactionDataset read_fimi(const std::filesystem::path& path);

    // Build from label lists, as if parsed from text.
    static TransactionDataset from_transactions(const std::vector<std::vector<Label>>& rows);

    // Build with an explicit item universe; items may have zero frequency.
    // Labels default to 1..items.
    static TransactionDataset from_dense(int items, std::vector<std::vector<Item>> rows,
                                         std::vector<Label> labels = {});

    int item_count() const { return static_cast<int>(labels_.size()); }
    int transaction_count() const { return m_; }

    const TidSet& item_cover(Item i) const { return covers_[check_item(i)]; }
    int frequency(Item i) const { return item_freq_[check_item(i)]; }

    // Intersection of the items' covers; the empty itemset covers everything.
    TidSet cover(std::span<const Item> itemset) const;
    int frequency(std::span<const Item> itemset) const;

    Label label(Item i) const { return labels_[check_item(i)]; }
    const std::vector<Label>& labels() const { return labels_; }
    std::optional<Item> index_of(Label id) const;

    // Per-transaction dense item lists, sorted ascending.
    const std::vector<std::vector<Item>>& transactions() const { return rows_; }

    // Dense indices permuted to ascending label order.
    const std::vector<Item>& items_by_label() const { return by_label_; }

    DatasetStats stats() const;
    void serialize_fimi(std::ostream& out) const;
    std::string serialize_fimi() const;

private:
    Item check_item(Item i) const {
        if (i < 0 || i >= item_count())
            throw std::out_of_range("item index " + std::to_string(i) + " out of range");
        return i;
    }
    void finish();  // builds covers_ and item_freq_ from rows_

    int m_ = 0;
    std::vector<Label> labels_;
    std::unordered_map<Label, Item> index_;
    std::vector<std::vector<Item>> rows_;
    std::vector<TidSet> covers_;
    std::vector<int> item_freq_;
    std::vector<Item> by_label_;
};

enum class Rounding { Ceil, Floor, HalfUp };

// Per-item absolute minimum supports, all >= 1.
class MisProfile {
public:
    explicit MisProfile(std::vector<int> supports);
    static MisProfile uniform(int items, int support);

    int size() const { return static_cast<int>(s_.size()); }
    int operator[](Item i) const { return s_[i]; }
    int min() const;
    int max() const;
    const std::vector<int>& supports() const { return s_; }

    friend bool operator==(const MisProfile&, const MisProfile&) = default;

private:
    std::vector<int> s_;
};

// The floor for assign_mis: an absolute count (>= 1) or a fraction of the
// transaction count in (0, 1].
struct MisThreshold {
    static MisThreshold absolute(int count);
    static MisThreshold relative(double fraction);

    bool is_relative = false;
    int count = 1;
    double fraction = 0.0;
};

// s_i = max(round(beta * freq(i)), round(mis_min)), clamped to >= 1, with the
// chosen rounding applied to both products. Products within 1e-9 of an
// integer are snapped to it first, so e.g. 0.1 * 30 rounds as 3.0 exactly.
MisProfile assign_mis(const TransactionDataset& ds, double beta, MisThreshold mis_min,
                      Rounding rounding = Rounding::Ceil);

// MIS file format: one "external_item_id absolute_support" pair per nonblank
// line. Every item of the dataset must be covered exactly once.
MisProfile read_mis(std::istream& in, const TransactionDataset& ds);
MisProfile read_mis(const std::filesystem::path& path, const TransactionDataset& ds);
void write_mis(std::ostream& out, const MisProfile& profile, const TransactionDataset& ds);

}  // namespace mismine
