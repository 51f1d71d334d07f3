#include "mismine/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace mismine {

namespace {

// Strict integer token: the whole token must parse.
Label parse_label(const std::string& tok, int line_no) {
    Label v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "non-integer token '" + tok + "'");
    return v;
}

}  // namespace

TransactionDataset TransactionDataset::parse_fimi(std::istream& in) {
    TransactionDataset ds;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        std::vector<Item> row;
        while (ls >> tok) {
            Label id = parse_label(tok, line_no);
            if (id < 0)
                throw ParseError(line_no, "negative item id " + std::to_string(id));
            auto [it, inserted] = ds.index_.try_emplace(id, ds.item_count());
            if (inserted) ds.labels_.push_back(id);
            row.push_back(it->second);
        }
        if (row.empty()) continue;  // blank line
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        ds.rows_.push_back(std::move(row));
    }
    if (ds.rows_.empty()) throw ParseError("empty dataset (zero transactions)");
    ds.m_ = static_cast<int>(ds.rows_.size());
    ds.finish();
    return ds;
}

TransactionDataset TransactionDataset::parse_fimi(const std::string& text) {
    std::istringstream in(text);
    return parse_fimi(in);
}

TransactionDataset TransactionDataset::read_fimi(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    return parse_fimi(in);
}

TransactionDataset TransactionDataset::from_transactions(
    const std::vector<std::vector<Label>>& rows) {
    std::ostringstream text;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) text << (i ? " " : "") << row[i];
        text << '\n';
    }
    return parse_fimi(text.str());
}

TransactionDataset TransactionDataset::from_dense(int items, std::vector<std::vector<Item>> rows,
                                                  std::vector<Label> labels) {
    if (labels.empty()) {
        labels.resize(items);
        for (int i = 0; i < items; ++i) labels[i] = i + 1;
    }
    if (static_cast<int>(labels.size()) != items)
        throw std::invalid_argument("label count does not match item count");
    TransactionDataset ds;
    ds.labels_ = std::move(labels);
    for (int i = 0; i < items; ++i) {
        if (!ds.index_.try_emplace(ds.labels_[i], i).second)
            throw std::invalid_argument("duplicate label");
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        if (!row.empty() && (row.front() < 0 || row.back() >= items))
            throw std::out_of_range("item index out of range");
    }
    ds.rows_ = std::move(rows);
    ds.m_ = static_cast<int>(ds.rows_.size());
    ds.finish();
    return ds;
}

void TransactionDataset::finish() {
    covers_.assign(item_count(), TidSet(m_));
    for (int t = 0; t < m_; ++t)
        for (Item i : rows_[t]) covers_[i].set(t);
    item_freq_.resize(item_count());
    for (Item i = 0; i < item_count(); ++i) item_freq_[i] = covers_[i].count();
}

TidSet TransactionDataset::cover(std::span<const Item> itemset) const {
    TidSet result(m_, /*full=*/true);
    for (Item i : itemset) result.intersect_with(covers_[check_item(i)]);
    return result;
}

int TransactionDataset::frequency(std::span<const Item> itemset) const {
    return cover(itemset).count();
}

std::optional<Item> TransactionDataset::index_of(Label id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

DatasetStats TransactionDataset::stats() const {
    DatasetStats st;
    st.transactions = m_;
    st.items = item_count();
    long long occurrences = 0;
    for (const auto& row : rows_) occurrences += static_cast<long long>(row.size());
    st.avg_transaction_size = m_ ? static_cast<double>(occurrences) / m_ : 0.0;
    st.density = st.items ? st.avg_transaction_size / st.items : 0.0;
    return st;
}

void TransactionDataset::serialize_fimi(std::ostream& out) const {
    for (const auto& row : rows_) {
        std::vector<Label> ids;
        ids.reserve(row.size());
        for (Item i : row) ids.push_back(labels_[i]);
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
        out << '\n';
    }
}

std::string TransactionDataset::serialize_fimi() const {
    std::ostringstream out;
    serialize_fimi(out);
    return out.str();
}

MisProfile::MisProfile(std::vector<int> supports) : s_(std::move(supports)) {
    for (int v : s_)
        if (v < 1) throw std::invalid_argument("minimum item support must be >= 1");
}

MisProfile MisProfile::uniform(int items, int support) {
    return MisProfile(std::vector<int>(items, support));
}

int MisProfile::min() const { return *std::min_element(s_.begin(), s_.end()); }
int MisProfile::max() const { return *std::max_element(s_.begin(), s_.end()); }

MisThreshold MisThreshold::absolute(int count) {
    if (count < 1) throw std::invalid_argument("absolute mis_min must be >= 1");
    return {.is_relative = false, .count = count, .fraction = 0.0};
}

MisThreshold MisThreshold::relative(double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("relative mis_min must lie in (0, 1]");
    return {.is_relative = true, .count = 0, .fraction = fraction};
}

namespace {

int round_count(double x, Rounding rounding) {
    double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9) return static_cast<int>(nearest);
    switch (rounding) {
        case Rounding::Ceil: return static_cast<int>(std::ceil(x));
        case Rounding::Floor: return static_cast<int>(std::floor(x));
        case Rounding::HalfUp: return static_cast<int>(std::floor(x + 0.5));
    }
    return 0;
}

}  // namespace

MisProfile assign_mis(const TransactionDataset& ds, double beta, MisThreshold mis_min,
                      Rounding rounding) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must lie in [0, 1]");
    int floor_support = mis_min.is_relative
                            ? round_count(mis_min.fraction * ds.transaction_count(), rounding)
                            : mis_min.count;
    std::vector<int> s(ds.item_count());
    for (Item i = 0; i < ds.item_count(); ++i) {
        int scaled = round_count(beta * ds.frequency(i), rounding);
        s[i] = std::max(1, std::max(scaled, floor_support));
    }
    return MisProfile(std::move(s));
}

MisProfile read_mis(std::istream& in, const TransactionDataset& ds) {
    std::vector<int> s(ds.item_count(), 0);
    std::vector<bool> seen(ds.item_count(), false);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        std::vector<Label> fields;
        while (ls >> tok) fields.push_back(parse_label(tok, line_no));
        if (fields.empty()) continue;
        if (fields.size() != 2)
            throw ParseError(line_no, "expected 'item_id support'");
        auto idx = ds.index_of(fields[0]);
        if (!idx) throw ParseError(line_no, "unknown item id " + std::to_string(fields[0]));
        if (fields[1] < 1)
            throw ParseError(line_no, "support " + std::to_string(fields[1]) + " < 1");
        if (seen[*idx])
            throw ParseError(line_no, "duplicate item id " + std::to_string(fields[0]));
        seen[*idx] = true;
        s[*idx] = static_cast<int>(fields[1]);
    }
    for (Item i = 0; i < ds.item_count(); ++i)
        if (!seen[i])
            throw ParseError("missing support for item id " + std::to_string(ds.label(i)));
    return MisProfile(std::move(s));
}

MisProfile read_mis(const std::filesystem::path& path, const TransactionDataset& ds) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    return read_mis(in, ds);
}

void write_mis(std::ostream& out, const MisProfile& profile, const TransactionDataset& ds) {
    if (profile.size() != ds.item_count())
        throw std::invalid_argument("profile size does not match dataset");
    std::map<Label, int> by_label;
    for (Item i = 0; i < ds.item_count(); ++i) by_label[ds.label(i)] = profile[i];
    for (const auto& [label, support] : by_label) out << label << ' ' << support << '\n';
}

}  // namespace mismine
