#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mismine/oracle.hpp"
#include "mismine/queries.hpp"

namespace py = pybind11;
using namespace mismine;

namespace {

std::vector<Item> to_dense(const TransactionDataset& ds, const std::vector<Label>& labels) {
    std::vector<Item> items;
    items.reserve(labels.size());
    for (Label id : labels) {
        auto idx = ds.index_of(id);
        if (!idx) throw py::key_error("unknown item id " + std::to_string(id));
        items.push_back(*idx);
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

std::vector<Label> to_labels(const TransactionDataset& ds, const oracle::Itemset& p) {
    std::vector<Label> out;
    out.reserve(p.size());
    for (Item i : p) out.push_back(ds.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

Rounding parse_rounding(const std::string& name) {
    if (name == "ceil") return Rounding::Ceil;
    if (name == "floor") return Rounding::Floor;
    if (name == "half-up") return Rounding::HalfUp;
    throw py::value_error("rounding must be ceil, floor or half-up");
}

QueryKind parse_query(const std::string& name) {
    if (name == "q0") return QueryKind::Q0;
    if (name == "q1") return QueryKind::Q1;
    if (name == "q2") return QueryKind::Q2;
    if (name == "q3") return QueryKind::Q3;
    throw py::value_error("query must be q0, q1, q2 or q3");
}

Q3Mode parse_mode(const std::string& name) {
    if (name == "disjoint") return Q3Mode::Disjoint;
    if (name == "distinct") return Q3Mode::Distinct;
    throw py::value_error("mode must be disjoint or distinct");
}

struct MineResult {
    py::list solutions;
    SearchStats stats;
};

}  // namespace

PYBIND11_MODULE(mismine, m) {
    m.doc() = "Frequent and rare itemset mining under multiple minimum item supports";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<DatasetStats>(m, "DatasetStats")
        .def_readonly("transactions", &DatasetStats::transactions)
        .def_readonly("items", &DatasetStats::items)
        .def_readonly("avg_transaction_size", &DatasetStats::avg_transaction_size)
        .def_readonly("density", &DatasetStats::density)
        .def("__repr__", [](const DatasetStats& st) {
            std::ostringstream out;
            out << "DatasetStats(transactions=" << st.transactions << ", items=" << st.items
                << ", avg_transaction_size=" << st.avg_transaction_size
                << ", density=" << st.density << ")";
            return out.str();
        });

    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("solutions", &SearchStats::solutions)
        .def_readonly("nodes", &SearchStats::nodes)
        .def_readonly("fails", &SearchStats::fails)
        .def_property_readonly("elapsed_ms", &SearchStats::elapsed_ms)
        .def("__repr__", [](const SearchStats& st) {
            std::ostringstream out;
            out << "SearchStats(solutions=" << st.solutions << ", nodes=" << st.nodes
                << ", fails=" << st.fails << ", elapsed_ms=" << st.elapsed_ms() << ")";
            return out.str();
        });

    py::class_<TransactionDataset>(m, "Dataset")
        .def_static("parse_fimi",
                    static_cast<TransactionDataset (*)(const std::string&)>(
                        &TransactionDataset::parse_fimi),
                    py::arg("text"), "Parse a FIMI transaction text.")
        .def_static(
            "read_fimi",
            [](const std::string& path) { return TransactionDataset::read_fimi(path); },
            py::arg("path"), "Read a FIMI transaction file.")
        .def_static("from_transactions", &TransactionDataset::from_transactions,
                    py::arg("transactions"))
        .def_property_readonly("n_items", &TransactionDataset::item_count)
        .def_property_readonly("n_transactions", &TransactionDataset::transaction_count)
        .def_property_readonly("labels", &TransactionDataset::labels)
        .def("frequency",
             [](const TransactionDataset& ds, const std::vector<Label>& labels) {
                 return ds.frequency(to_dense(ds, labels));
             },
             py::arg("itemset"), "Number of transactions containing the itemset.")
        .def("cover",
             [](const TransactionDataset& ds, const std::vector<Label>& labels) {
                 return ds.cover(to_dense(ds, labels)).to_tids();
             },
             py::arg("itemset"), "Transaction indices containing the itemset.")
        .def("stats", &TransactionDataset::stats)
        .def("serialize_fimi",
             static_cast<std::string (TransactionDataset::*)() const>(
                 &TransactionDataset::serialize_fimi))
        .def("__repr__", [](const TransactionDataset& ds) {
            std::ostringstream out;
            out << "Dataset(" << ds.transaction_count() << " transactions, "
                << ds.item_count() << " items)";
            return out.str();
        });

    py::class_<MisProfile>(m, "MisProfile")
        .def(py::init<std::vector<int>>(), py::arg("supports"))
        .def_static("uniform", &MisProfile::uniform, py::arg("items"), py::arg("support"))
        .def_property_readonly("supports",
                               [](const MisProfile& p) { return p.supports(); })
        .def("__len__", &MisProfile::size)
        .def("__getitem__",
             [](const MisProfile& p, int i) {
                 if (i < 0 || i >= p.size()) throw py::index_error();
                 return p[i];
             })
        .def("to_dict",
             [](const MisProfile& p, const TransactionDataset& ds) {
                 if (p.size() != ds.item_count())
                     throw py::value_error("profile size does not match dataset");
                 py::dict out;
                 for (Item i = 0; i < p.size(); ++i)
                     out[py::int_(ds.label(i))] = p[i];
                 return out;
             },
             py::arg("dataset"), "Map original item id -> support.");

    m.def(
        "assign_mis",
        [](const TransactionDataset& ds, double beta, double mis_min, bool relative,
           const std::string& rounding) {
            MisThreshold threshold = relative
                                         ? MisThreshold::relative(mis_min)
                                         : MisThreshold::absolute(static_cast<int>(mis_min));
            return assign_mis(ds, beta, threshold, parse_rounding(rounding));
        },
        py::arg("dataset"), py::arg("beta"), py::arg("mis_min"), py::arg("relative") = false,
        py::arg("rounding") = "ceil",
        "Per-item supports: max(round(beta * freq(i)), mis_min), at least 1.");

    m.def(
        "read_mis",
        [](const std::string& text, const TransactionDataset& ds) {
            std::istringstream in(text);
            return read_mis(in, ds);
        },
        py::arg("text"), py::arg("dataset"));

    m.def(
        "write_mis",
        [](const MisProfile& profile, const TransactionDataset& ds) {
            std::ostringstream out;
            write_mis(out, profile, ds);
            return out.str();
        },
        py::arg("profile"), py::arg("dataset"));

    py::class_<MineResult>(m, "MineResult")
        .def_readonly("solutions", &MineResult::solutions)
        .def_readonly("stats", &MineResult::stats)
        .def("__repr__", [](const MineResult& r) {
            std::ostringstream out;
            out << "MineResult(" << r.stats.solutions << " solutions)";
            return out.str();
        });

    m.def(
        "mine",
        [](const TransactionDataset& ds, const MisProfile& mis, const std::string& query,
           std::optional<int> ub, std::optional<int> card, std::optional<int> k,
           const std::string& mode, bool symmetry_breaking, const std::string& order,
           bool count_only) {
            QuerySpec spec;
            spec.kind = parse_query(query);
            spec.ub = ub;
            spec.card = card;
            spec.k = k;
            spec.mode = parse_mode(mode);
            spec.symmetry_breaking = symmetry_breaking;
            VarOrder var_order = order == "lex" ? VarOrder::Lex : VarOrder::MinMis;

            MineResult result;
            SolutionSink sink;
            bool tuples = spec.kind == QueryKind::Q3;
            if (!count_only)
                sink = [&result, tuples](const Solution& sol) {
                    if (tuples)
                        result.solutions.append(sol.itemsets);
                    else
                        result.solutions.append(sol.itemsets[0]);
                };
            result.stats = solve_query(ds, mis, spec, sink, var_order);
            return result;
        },
        py::arg("dataset"), py::arg("mis"), py::arg("query") = "q0",
        py::arg("ub") = std::nullopt, py::arg("card") = std::nullopt,
        py::arg("k") = std::nullopt, py::arg("mode") = "disjoint",
        py::arg("symmetry_breaking") = true, py::arg("order") = "minmis",
        py::arg("count_only") = false,
        "Enumerate itemsets (q0..q2: lists of item ids; q3: lists of k itemsets).");

    m.def(
        "oracle_q0",
        [](const TransactionDataset& ds, const MisProfile& mis) {
            std::vector<std::vector<Label>> out;
            for (const auto& p : oracle::q0(ds, mis)) out.push_back(to_labels(ds, p));
            return out;
        },
        py::arg("dataset"), py::arg("mis"),
        "Brute-force frequent itemsets (guarded to 25 items).");

    m.def(
        "oracle_q3",
        [](const TransactionDataset& ds, const MisProfile& mis, int k, int ub, int card,
           const std::string& mode, bool ordered) {
            std::vector<std::vector<std::vector<Label>>> out;
            for (const auto& tuple :
                 oracle::q3(ds, mis, k, ub, card, parse_mode(mode), ordered)) {
                std::vector<std::vector<Label>> labels;
                for (const auto& p : tuple) labels.push_back(to_labels(ds, p));
                out.push_back(labels);
            }
            return out;
        },
        py::arg("dataset"), py::arg("mis"), py::arg("k"), py::arg("ub"), py::arg("card"),
        py::arg("mode") = "disjoint", py::arg("ordered") = false,
        "Brute-force k-pattern sets (guarded to 10 items, k <= 3).");
}
