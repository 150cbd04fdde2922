#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "seqgraph/builder.hpp"
#include "seqgraph/core.hpp"
#include "seqgraph/dpcount.hpp"
#include "seqgraph/gadgets.hpp"
#include "seqgraph/gu.hpp"
#include "seqgraph/ilp.hpp"
#include "seqgraph/oracle.hpp"
#include "seqgraph/w2.hpp"

using namespace seqgraph;

namespace {

constexpr int kYes = 0;          // ok / realizable / verified
constexpr int kNo = 1;           // not realizable / verification failed
constexpr int kUnsupported = 2;  // honest "cannot decide" (budget, variant)
constexpr int kError = 3;        // malformed input, bad arguments

SeqGraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::parse_error, "cannot open " + path);
    return parse_graph(in);
}

std::vector<Sequence> load_sequences(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::parse_error, "cannot open " + path);
    return parse_sequences(in);
}

void print_witness(const Sequence &x, const SeqGraph &g, int w) {
    if (!realizes(x, g, w))
        throw std::logic_error("witness failed re-verification");
    std::cout << sequence_to_string(x) << "\n";
}

int run_realizable(const std::string &path, int w, bool want_witness,
                   long long budget, int max_len) {
    SeqGraph g = load_graph(path);
    if (g.weighted) {
        if (w == 2) {
            if (!w2_weighted_realizable(g))
                return kNo;
            if (want_witness)
                print_witness(*w2_witness(g), g, w);
            return kYes;
        }
        if (want_witness) {
            auto found = dp_enumerate(g, w, 1, std::nullopt,
                                      static_cast<std::size_t>(budget));
            if (found.empty())
                return kNo;
            print_witness(found.front(), g, w);
            return kYes;
        }
        return dp_count(g, w, std::nullopt, static_cast<std::size_t>(budget))
                       .positive()
                   ? kYes
                   : kNo;
    }
    if (!g.directed) {
        if (w == 2) {
            if (!gu2_realizable(g))
                return kNo;
            if (want_witness)
                print_witness(*w2_witness(g), g, w);
            return kYes;
        }
        auto wit = gu_realizable(g, w, static_cast<std::size_t>(budget));
        if (!wit)
            return kNo;
        if (want_witness)
            print_witness(*wit, g, w);
        return kYes;
    }
    // DU
    if (w == 2) {
        if (!du2_realizable(g))
            return kNo;
        if (want_witness)
            print_witness(*w2_witness(g), g, w);
        return kYes;
    }
    // No complete algorithm at w >= 3: search within the bound, stay honest.
    for (VertexId v = 0; g.n() >= 2 && v < g.n(); v++)
        if (g.edge_free(v))
            return kNo;
    SearchOptions opts;
    opts.w = w;
    opts.mode = SearchMode::first;
    opts.max_len = max_len > 0 ? max_len : 2 * g.n() * g.n() * g.n();
    opts.node_budget = budget;
    SearchResult r = search(g, opts);
    if (!r.witnesses.empty()) {
        if (want_witness)
            print_witness(r.witnesses.front(), g, w);
        return kYes;
    }
    std::cerr << "unsupported: no realization with length <= " << opts.max_len
              << "; longer ones are not ruled out\n";
    return kUnsupported;
}

int run_count(const std::string &path, int w, int max_len, long long budget) {
    SeqGraph g = load_graph(path);
    if (g.weighted) {
        BigCount c = w == 2 ? (g.directed ? dw2_count(g) : gw2_count(g, budget))
                            : dp_count(g, w, std::nullopt,
                                       static_cast<std::size_t>(budget));
        std::cout << c.str() << "\n";
        return kYes;
    }
    if (g.directed && w == 2) {
        std::cout << du2_count(g).str() << "\n";
        return kYes;
    }
    if (max_len <= 0) {
        std::cerr << "unsupported: counting unweighted realizations at w >= 3 "
                     "needs --max-len\n";
        return kUnsupported;
    }
    if (!g.directed) {
        std::cout << gu_count_bounded(g, w, max_len, budget).str() << "\n";
        return kYes;
    }
    SearchOptions opts;
    opts.w = w;
    opts.mode = SearchMode::count;
    opts.max_len = max_len;
    opts.node_budget = budget;
    std::cout << search(g, opts).count.get_str() << "\n";
    return kYes;
}

int run_oracle(const std::string &path, const std::string &mode, int w,
               int max_len, long long budget) {
    SeqGraph g = load_graph(path);
    SearchOptions opts;
    opts.w = w;
    opts.max_len = max_len;
    opts.node_budget = budget;
    opts.mode = mode == "count"   ? SearchMode::count
                : mode == "first" ? SearchMode::first
                                  : SearchMode::all;
    SearchResult r = search(g, opts);
    if (opts.mode == SearchMode::count) {
        std::cout << r.count.get_str() << "\n";
        return kYes;
    }
    for (const Sequence &x : r.witnesses)
        std::cout << sequence_to_string(x) << "\n";
    if (opts.mode == SearchMode::first && r.witnesses.empty())
        return kNo;
    return kYes;
}

int run_verify(const std::string &graph_path, const std::string &seq_path,
               int w) {
    SeqGraph g = load_graph(graph_path);
    bool all_ok = true;
    for (const Sequence &x : load_sequences(seq_path)) {
        bool ok = realizes(x, g, w);
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok" : "fail") << "\n";
    }
    return all_ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"sequence graph toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    int w = 2, max_len = 0, clique_k = 3, expo_n = 2, expo_k = 2;
    long long budget = 0, seed = 0;
    bool directed = false, weighted = false, want_witness = false;
    bool filtered = false;
    std::string graph_path, seq_path, oracle_mode, witness_out;

    auto *build_cmd = app.add_subcommand("build", "sequence file -> graph");
    build_cmd->add_option("--window", w, "window size")->required();
    build_cmd->add_flag("--directed", directed, "ordered pairs");
    build_cmd->add_flag("--weighted", weighted, "pair multiplicities");
    build_cmd->add_option("seq-file", seq_path)->required();
    build_cmd->callback([&] {
        action = [&]() {
            auto seqs = load_sequences(seq_path);
            if (seqs.size() != 1)
                throw Error(ErrorCode::invalid_argument,
                            "expected exactly one sequence");
            BuildOptions opts{w, directed, weighted};
            write_graph(std::cout, build(seqs[0], opts));
            return kYes;
        };
    });

    auto *real_cmd = app.add_subcommand("realizable", "is any sequence's graph");
    real_cmd->add_option("--window", w)->required();
    real_cmd->add_flag("--witness", want_witness, "print one realization");
    real_cmd->add_option("--budget", budget, "search/state budget");
    real_cmd->add_option("--max-len", max_len, "length bound (DU, w >= 3)");
    real_cmd->add_option("graph-file", graph_path)->required();
    real_cmd->callback([&] {
        action = [&]() {
            return run_realizable(graph_path, w, want_witness,
                                  budget > 0 ? budget : 50'000'000, max_len);
        };
    });

    auto *count_cmd = app.add_subcommand("count", "number of realizations");
    count_cmd->add_option("--window", w)->required();
    count_cmd->add_option("--max-len", max_len, "length bound (unweighted, w >= 3)");
    count_cmd->add_option("--budget", budget, "search/state budget");
    count_cmd->add_option("graph-file", graph_path)->required();
    count_cmd->callback([&] {
        action = [&]() {
            return run_count(graph_path, w, max_len,
                             budget > 0 ? budget : 50'000'000);
        };
    });

    auto *oracle_cmd = app.add_subcommand("oracle", "bounded exhaustive search");
    oracle_cmd->add_option("mode", oracle_mode)
        ->check(CLI::IsMember({"count", "first", "all"}))
        ->required();
    oracle_cmd->add_option("--window", w)->required();
    oracle_cmd->add_option("--max-len", max_len)->required();
    oracle_cmd->add_option("--budget", budget, "node budget");
    oracle_cmd->add_option("--seed", seed, "accepted for interface stability");
    oracle_cmd->add_option("graph-file", graph_path)->required();
    oracle_cmd->callback([&] {
        action = [&]() {
            return run_oracle(graph_path, oracle_mode, w, max_len,
                              budget > 0 ? budget : 10'000'000);
        };
    });

    auto *gadget_cmd = app.add_subcommand("gadget", "instance generators");
    gadget_cmd->add_option("--seed", seed, "accepted for interface stability");
    auto *clique_cmd = gadget_cmd->add_subcommand("clique");
    clique_cmd->add_option("--k", clique_k, "clique size")->required();
    clique_cmd->add_option("graph-file", graph_path)->required();
    clique_cmd->callback([&] {
        action = [&]() {
            auto [gp, wp] = clique_gadget(load_graph(graph_path), clique_k);
            std::cout << "# window " << wp << "\n";
            write_graph(std::cout, gp);
            return kYes;
        };
    });
    for (const char *name : {"hp1", "hp2"}) {
        auto *cmd = gadget_cmd->add_subcommand(name);
        cmd->add_option("graph-file", graph_path)->required();
        cmd->callback([&, name] {
            action = [&, name]() {
                SeqGraph g = load_graph(graph_path);
                write_graph(std::cout, std::string(name) == "hp1" ? hp1(g)
                                                                  : hp2(g));
                return kYes;
            };
        });
    }
    auto *optional_cmd = gadget_cmd->add_subcommand("optional");
    optional_cmd->add_option("--window", w)->required();
    optional_cmd->add_option("graph-file", graph_path)->required();
    optional_cmd->callback([&] {
        action = [&]() {
            OptionalInstance inst = optional_instance(load_graph(graph_path), w);
            std::cout << "# window " << inst.w << "\n";
            for (auto [u, v] : inst.compulsory)
                std::cout << "# compulsory " << u << " " << v << "\n";
            std::cout << "# prefix " << sequence_to_string(inst.prefix) << "\n";
            write_graph(std::cout, inst.graph);
            return kYes;
        };
    });
    auto *chain_cmd = gadget_cmd->add_subcommand("du-chain");
    chain_cmd->add_option("--window", w)->required();
    chain_cmd->add_option("graph-file", graph_path)->required();
    chain_cmd->callback([&] {
        action = [&]() {
            DuChain chain = du_chain(optional_instance(load_graph(graph_path), w));
            std::cout << "# window " << w << "\n";
            std::cout << "# prefix " << sequence_to_string(chain.prefix) << "\n";
            write_graph(std::cout, chain.graph);
            return kYes;
        };
    });
    for (const char *name : {"dw-ham", "gw-ham"}) {
        auto *cmd = gadget_cmd->add_subcommand(name);
        cmd->add_option("--window", w)->required();
        cmd->add_option("graph-file", graph_path)->required();
        cmd->callback([&, name] {
            action = [&, name]() {
                SeqGraph g = load_graph(graph_path);
                std::cout << "# window " << w << "\n";
                write_graph(std::cout, std::string(name) == "dw-ham"
                                           ? dw_ham(g, w)
                                           : gw_ham(g, w));
                return kYes;
            };
        });
    }
    auto *expo_cmd = gadget_cmd->add_subcommand("expo");
    expo_cmd->add_option("--n", expo_n, "alphabet per rank")->required();
    expo_cmd->add_option("--k", expo_k, "ranks; window k+1")->required();
    expo_cmd->add_flag("--filtered", filtered, "keep only witness arcs");
    expo_cmd->add_option("--witness-out", witness_out, "witness sequence file");
    expo_cmd->callback([&] {
        action = [&]() {
            ExpoInstance inst = expo(expo_n, expo_k, filtered);
            std::cout << "# window " << expo_k + 1 << "\n";
            write_graph(std::cout, inst.graph);
            if (!witness_out.empty()) {
                if (!filtered)
                    throw Error(ErrorCode::invalid_argument,
                                "--witness-out needs --filtered");
                std::ofstream out(witness_out);
                if (!out)
                    throw Error(ErrorCode::parse_error,
                                "cannot write " + witness_out);
                out << sequence_to_string(inst.witness) << "\n";
            }
            return kYes;
        };
    });
    gadget_cmd->require_subcommand(1);

    auto *ilp_cmd = app.add_subcommand("export-ilp", "LP-format program");
    ilp_cmd->add_option("--window", w)->required();
    ilp_cmd->add_option("graph-file", graph_path)->required();
    ilp_cmd->callback([&] {
        action = [&]() {
            std::cout << emit_ilp(load_graph(graph_path), w).text;
            return kYes;
        };
    });

    auto *verify_cmd = app.add_subcommand("verify", "sequences against a graph");
    verify_cmd->add_option("--window", w)->required();
    verify_cmd->add_option("graph-file", graph_path)->required();
    verify_cmd->add_option("seq-file", seq_path)->required();
    verify_cmd->callback([&] {
        action = [&]() { return run_verify(graph_path, seq_path, w); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kYes : kError;
    }
    try {
        return action();
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::budget_exceeded ||
                       e.code() == ErrorCode::unsupported
                   ? kUnsupported
                   : kError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
