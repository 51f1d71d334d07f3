#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mismine/bench.hpp"
#include "mismine/oracle.hpp"
#include "mismine/queries.hpp"
#include "mismine/verify.hpp"

namespace {

using namespace mismine;

// exit codes: 0 success, 1 usage, 2 input error, 3 verification mismatch
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInputError = 2;
constexpr int kMismatch = 3;

Rounding parse_rounding(const std::string& name) {
    if (name == "ceil") return Rounding::Ceil;
    if (name == "floor") return Rounding::Floor;
    if (name == "half-up") return Rounding::HalfUp;
    throw std::invalid_argument("unknown rounding '" + name + "'");
}

struct MisFlags {
    std::string mis_file;
    std::optional<double> beta;
    std::optional<double> mis_min;
    bool relative = false;
    std::string rounding = "ceil";
};

void add_mis_options(CLI::App* cmd, MisFlags& flags, bool file_alternative) {
    if (file_alternative)
        cmd->add_option("--mis", flags.mis_file, "MIS file (lines: item_id support)");
    auto* beta = cmd->add_option("--beta", flags.beta,
                                 "scale factor on item frequencies, in [0,1]");
    auto* mm = cmd->add_option("--mis-min", flags.mis_min,
                               "support floor: absolute count, or fraction with --relative");
    cmd->add_flag("--relative", flags.relative, "treat --mis-min as a fraction of |D|");
    cmd->add_option("--rounding", flags.rounding, "ceil|floor|half-up (default ceil)")
        ->check(CLI::IsMember({"ceil", "floor", "half-up"}));
    beta->needs(mm);
    mm->needs(beta);
}

MisProfile make_profile(const TransactionDataset& ds, const MisFlags& flags) {
    if (!flags.mis_file.empty()) return read_mis(flags.mis_file, ds);
    if (!flags.beta || !flags.mis_min)
        throw std::invalid_argument("need either --mis FILE or both --beta and --mis-min");
    MisThreshold threshold;
    if (flags.relative) {
        threshold = MisThreshold::relative(*flags.mis_min);
    } else {
        double rounded = std::round(*flags.mis_min);
        if (std::abs(*flags.mis_min - rounded) > 1e-12)
            throw std::invalid_argument("absolute --mis-min must be an integer");
        threshold = MisThreshold::absolute(static_cast<int>(rounded));
    }
    return assign_mis(ds, *flags.beta, threshold, parse_rounding(flags.rounding));
}

QueryKind parse_query(const std::string& name) {
    if (name == "q0") return QueryKind::Q0;
    if (name == "q1") return QueryKind::Q1;
    if (name == "q2") return QueryKind::Q2;
    if (name == "q3") return QueryKind::Q3;
    throw std::invalid_argument("unknown query '" + name + "'");
}

struct QueryFlags {
    std::string query = "q0";
    std::optional<int> ub;
    std::optional<int> card;
    std::optional<int> k;
    std::string mode = "disjoint";
    std::string order = "minmis";
    bool no_symbreak = false;
};

void add_query_options(CLI::App* cmd, QueryFlags& flags) {
    cmd->add_option("--query", flags.query, "q0|q1|q2|q3 (default q0)")
        ->check(CLI::IsMember({"q0", "q1", "q2", "q3"}));
    cmd->add_option("--ub", flags.ub, "max MIS distance inside an itemset (q1..q3)");
    cmd->add_option("--card", flags.card, "minimum itemset size (q2..q3)");
    cmd->add_option("-k", flags.k, "number of itemsets (q3)");
    cmd->add_option("--mode", flags.mode, "q3 coupling: disjoint|distinct")
        ->check(CLI::IsMember({"disjoint", "distinct"}));
    cmd->add_option("--order", flags.order, "variable ordering: minmis|lex")
        ->check(CLI::IsMember({"minmis", "lex"}));
    cmd->add_flag("--no-symbreak", flags.no_symbreak,
                  "emit ordered tuples in q3 disjoint mode (k! per set)");
}

QuerySpec make_spec(const QueryFlags& flags) {
    QuerySpec spec;
    spec.kind = parse_query(flags.query);
    spec.ub = flags.ub;
    spec.card = flags.card;
    spec.k = flags.k;
    spec.mode = flags.mode == "distinct" ? Q3Mode::Distinct : Q3Mode::Disjoint;
    spec.symmetry_breaking = !flags.no_symbreak;
    return spec;
}

VarOrder make_order(const QueryFlags& flags) {
    return flags.order == "lex" ? VarOrder::Lex : VarOrder::MinMis;
}

void print_solution(std::ostream& out, const Solution& sol) {
    for (std::size_t b = 0; b < sol.itemsets.size(); ++b) {
        if (b) out << " | ";
        const auto& labels = sol.itemsets[b];
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
    }
    out << '\n';
}

int cmd_stats(const std::string& path) {
    DatasetStats st = TransactionDataset::read_fimi(path).stats();
    std::printf("%d transactions, %d items, avg transaction size %.2f, density %.1f%%\n",
                st.transactions, st.items, st.avg_transaction_size, st.density * 100.0);
    return kOk;
}

int cmd_gen_mis(const std::string& path, const MisFlags& flags) {
    TransactionDataset ds = TransactionDataset::read_fimi(path);
    if (!flags.mis_file.empty())
        throw std::invalid_argument("gen-mis takes --beta/--mis-min, not --mis");
    write_mis(std::cout, make_profile(ds, flags), ds);
    return kOk;
}

int cmd_mine(const std::string& path, const MisFlags& mis_flags, const QueryFlags& query_flags,
             bool count_only, const std::string& out_path) {
    TransactionDataset ds = TransactionDataset::read_fimi(path);
    MisProfile mis = make_profile(ds, mis_flags);
    QuerySpec spec = make_spec(query_flags);
    validate(spec);

    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw ParseError("cannot open file: " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : out_file;

    SolutionSink sink;
    if (!count_only) sink = [&out](const Solution& sol) { print_solution(out, sol); };
    SearchStats stats = solve_query(ds, mis, spec, sink, make_order(query_flags));

    std::fprintf(stderr, "sol=%lld nodes=%lld fails=%lld ms=%lld\n", stats.solutions,
                 stats.nodes, stats.fails, std::llround(stats.elapsed_ms()));
    return kOk;
}

int cmd_verify(const VerifyParams& params) {
    constexpr int kQ0Guard = 25;
    constexpr int kQ3Guard = 10;
    int guard = params.spec.kind == QueryKind::Q3 ? kQ3Guard : kQ0Guard;
    if (params.items > guard)
        throw std::invalid_argument("--items " + std::to_string(params.items) +
                                    " exceeds the oracle guard of " + std::to_string(guard));
    if (params.spec.kind == QueryKind::Q3 && params.spec.k && *params.spec.k > 3)
        throw std::invalid_argument("-k beyond 3 exceeds the oracle guard");

    VerifyOutcome outcome = run_verify(params);
    if (outcome.ok()) {
        std::printf("ok: %d trials (%s), engine matches oracle, %lld solutions total\n",
                    outcome.trials_run, describe(params.spec).c_str(),
                    outcome.total_solutions);
        return kOk;
    }
    const VerifyMismatch& mm = *outcome.mismatch;
    std::printf("mismatch at trial %d (%s): %s\n", mm.trial, mm.query.c_str(),
                mm.detail.c_str());
    std::printf("dataset:\n%s", mm.dataset_fimi.c_str());
    std::printf("mis:\n%s", mm.mis_text.c_str());
    return kMismatch;
}

int cmd_bench(const std::vector<std::string>& size_args, std::uint64_t seed) {
    std::vector<std::pair<int, int>> sizes;
    for (const auto& arg : size_args) {
        auto colon = arg.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--sizes wants items:transactions, got '" + arg + "'");
        sizes.emplace_back(std::stoi(arg.substr(0, colon)), std::stoi(arg.substr(colon + 1)));
    }
    if (sizes.empty()) sizes = default_bench_sizes();

    std::printf("%8s %12s %10s %16s\n", "items", "transactions", "cells", "ns_per_node");
    for (const BenchRow& row : bench_sweep(sizes, seed))
        std::printf("%8d %12d %10lld %16.1f\n", row.items, row.transactions, row.cells(),
                    row.ns_per_node);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mismine: frequent itemset mining with multiple minimum item supports"};
    app.require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "dataset characteristics");
    std::string stats_path;
    stats->add_option("dataset", stats_path, "FIMI transaction file")->required();

    auto* gen = app.add_subcommand("gen-mis", "derive an MIS profile from item frequencies");
    std::string gen_path;
    MisFlags gen_mis_flags;
    gen->add_option("dataset", gen_path, "FIMI transaction file")->required();
    add_mis_options(gen, gen_mis_flags, /*file_alternative=*/false);

    auto* mine = app.add_subcommand("mine", "enumerate itemsets for a query");
    std::string mine_path, mine_out;
    MisFlags mine_mis_flags;
    QueryFlags mine_query_flags;
    bool count_only = false;
    mine->add_option("dataset", mine_path, "FIMI transaction file")->required();
    add_mis_options(mine, mine_mis_flags, /*file_alternative=*/true);
    add_query_options(mine, mine_query_flags);
    mine->add_flag("--count-only", count_only, "suppress solution lines");
    mine->add_option("--out", mine_out, "write solutions to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "randomized engine-vs-oracle equivalence");
    VerifyParams verify_params;
    QueryFlags verify_query_flags;
    verify->add_option("--items", verify_params.items, "item count (oracle guard applies)");
    verify->add_option("--transactions", verify_params.transactions, "transaction count");
    verify->add_option("--density", verify_params.density, "cell probability")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--trials", verify_params.trials, "number of random instances");
    verify->add_option("--seed", verify_params.seed, "RNG seed");
    add_query_options(verify, verify_query_flags);

    auto* bench = app.add_subcommand("bench", "propagation cost across a size sweep");
    bool scale_sweep = false;
    std::vector<std::string> bench_sizes;
    std::uint64_t bench_seed = 7;
    bench->add_flag("--scale-sweep", scale_sweep, "run the default 10x sweep (the default)");
    bench->add_option("--sizes", bench_sizes, "items:transactions rows overriding the sweep");
    bench->add_option("--seed", bench_seed, "RNG seed for the synthetic datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(stats_path);
        if (gen->parsed()) return cmd_gen_mis(gen_path, gen_mis_flags);
        if (mine->parsed())
            return cmd_mine(mine_path, mine_mis_flags, mine_query_flags, count_only, mine_out);
        if (verify->parsed()) {
            verify_params.spec = make_spec(verify_query_flags);
            verify_params.order = make_order(verify_query_flags);
            return cmd_verify(verify_params);
        }
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_seed);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
    return kUsage;
}
