// Command-line front end: recognition, betweenness, reduction, cuts, the
// exhaustive sentence check, reconstructibility, Ext graphs, generators and
// brute-force oracles over the line-based file formats of betpo/io.hpp.
//
// Exit codes: 0 for positive verdicts, 2 for negative mathematical
// verdicts, 1 for I/O, parse and usage failures. Standard output carries
// machine-readable payloads; diagnostics go to standard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betpo/core.hpp"
#include "betpo/generators.hpp"
#include "betpo/graphs.hpp"
#include "betpo/io.hpp"
#include "betpo/mso.hpp"
#include "betpo/oracle.hpp"
#include "betpo/recognize.hpp"
#include "betpo/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

betpo::TernaryStructure read_structure(const std::string& file) {
    if (file == "-") return betpo::parse_structure(std::cin);
    std::ifstream in(file);
    if (!in) throw betpo::Error("cannot open " + file);
    return betpo::parse_structure(in);
}

betpo::Poset read_poset(const std::string& file) {
    if (file == "-") return betpo::parse_poset(std::cin);
    std::ifstream in(file);
    if (!in) throw betpo::Error("cannot open " + file);
    return betpo::parse_poset(in);
}

void write_poset_file(const std::string& file, const betpo::Poset& p) {
    std::ofstream out(file);
    if (!out) throw betpo::Error("cannot write " + file);
    betpo::print_poset(out, p);
}

void print_vertex_list(std::ostream& out, const std::vector<betpo::Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << "\n";
}

int default_max_component() {
    if (const char* env = std::getenv("BETPO_MAX_COMPONENT")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw betpo::Error("BETPO_MAX_COMPONENT is not an integer");
        }
    }
    return betpo::kDefaultMaxComponent;
}

int run_check(const std::string& file, const std::string& emit, bool all_solutions) {
    betpo::TernaryStructure s = read_structure(file);
    betpo::RecognitionOutcome out = betpo::recognize(s);
    if (!out.accepted()) {
        const betpo::Rejection& rej = out.rejection();
        std::cout << "rejected " << betpo::to_string(rej.reason) << "\n";
        std::cerr << "reason: " << betpo::to_string(rej.reason) << "\n";
        if (!rej.component.empty()) {
            std::cerr << "component:";
            for (betpo::Vertex v : rej.component) std::cerr << " " << v;
            std::cerr << "\n";
        }
        if (!rej.witness.empty()) {
            std::cerr << "witness:";
            for (betpo::Vertex v : rej.witness) std::cerr << " " << v;
            std::cerr << "\n";
        }
        return kExitNegative;
    }
    std::cout << "accepted\n";
    if (all_solutions) {
        std::vector<betpo::Poset> sols = betpo::solutions_b_minimal(s);
        std::cout << "solutions " << sols.size() << "\n";
        if (!emit.empty()) {
            for (std::size_t i = 0; i < sols.size(); ++i) {
                write_poset_file(emit + "." + std::to_string(i), sols[i]);
            }
        }
    } else if (!emit.empty()) {
        write_poset_file(emit, out.witness());
    }
    return kExitOk;
}

int run_bet(const std::string& file) {
    betpo::Poset p = read_poset(file);
    betpo::print_structure(std::cout, betpo::betweenness_of(p));
    return kExitOk;
}

int run_minimize(const std::string& file) {
    betpo::Poset p = read_poset(file);
    betpo::Poset m = betpo::minimize(p);
    for (const betpo::Pair& q : p.pairs()) {
        if (!m.less(q.a, q.b)) std::cerr << "removed " << q.a << " " << q.b << "\n";
    }
    betpo::print_poset(std::cout, m);
    return kExitOk;
}

int run_cut(const std::string& file) {
    betpo::Poset p = read_poset(file);
    betpo::Cut cut;
    try {
        cut = betpo::cut_of(p);
    } catch (const betpo::HasIsolatedElement& e) {
        std::cerr << "no cut: " << e.what() << "\n";
        return kExitNegative;
    }
    std::cout << "L:";
    for (betpo::Vertex v : cut.lower) std::cout << " " << v;
    std::cout << "\nU:";
    for (betpo::Vertex v : cut.upper) std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
}

int run_mso(const std::string& file, int max_component) {
    betpo::TernaryStructure s = read_structure(file);
    betpo::MsoVerdict verdict = betpo::theta_check(s, max_component);
    if (!verdict.satisfied) {
        std::cout << "unsatisfied\n";
        std::cerr << "failing component:";
        for (betpo::Vertex v : verdict.failing_component) std::cerr << " " << v;
        std::cerr << "\n";
        return kExitNegative;
    }
    std::cout << "satisfied\n";
    for (const std::vector<betpo::Vertex>& lower : verdict.witness_lower) {
        std::cout << "L:";
        for (betpo::Vertex v : lower) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_reconstructible(const std::string& file) {
    betpo::Poset p = read_poset(file);
    if (betpo::is_b_reconstructible(p)) {
        std::cout << "yes\n";
        return kExitOk;
    }
    std::cout << "no\n";
    return kExitNegative;
}

int run_ext(const std::string& file, bool dot) {
    betpo::TernaryStructure s = read_structure(file);
    betpo::SimpleGraph ext = betpo::ext_graph(s);
    if (dot) {
        std::cout << betpo::to_dot(ext, "ext");
    } else {
        std::cout << "vertices:";
        for (betpo::Vertex v : ext.tag()) std::cout << " " << v;
        std::cout << "\n";
        for (const betpo::Pair& e : ext.edges()) std::cout << e.a << " " << e.b << "\n";
    }
    return kExitOk;
}

int run_oracle_scan(int n) {
    betpo::ScanReport report = betpo::exhaustive_structure_scan(n);
    std::cout << report.summary() << "\n";
    if (report.disagreement) {
        std::cerr << "first disagreeing structure:\n";
        betpo::print_structure(std::cerr, *report.disagreement);
        return kExitNegative;
    }
    return kExitOk;
}

int run_oracle_count(const std::string& file) {
    betpo::TernaryStructure s = read_structure(file);
    std::size_t count = betpo::posets_with_betweenness(s).size();
    std::cout << count << "\n";
    return count == 0 ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"betweenness relations of finite posets: recognition and analysis"};
    app.require_subcommand(1);

    std::string file;
    std::string emit;
    bool all_solutions = false;
    int max_component = betpo::kDefaultMaxComponent;
    try {
        max_component = default_max_component();
    } catch (const betpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    bool dot = false;
    int param_n = 0;
    double param_p = 0.0;
    std::uint64_t param_seed = 0;

    CLI::App* check = app.add_subcommand("check", "decide whether a ternary structure is a "
                                                  "poset betweenness; print accepted/rejected");
    check->add_option("file", file, "ternary structure file, or - for stdin")->required();
    check->add_option("--emit-poset", emit, "write the witness poset here (with "
                                            "--all-solutions: one file per suffix .0, .1, ...)");
    check->add_flag("--all-solutions", all_solutions,
                    "report and emit every orientation of the witness");

    CLI::App* bet = app.add_subcommand("bet", "betweenness structure of a poset file");
    bet->add_option("file", file, "poset file, or - for stdin")->required();

    CLI::App* minimize = app.add_subcommand("minimize", "smallest sub-order with the same "
                                                        "betweenness; removed pairs on stderr");
    minimize->add_option("file", file, "poset file, or - for stdin")->required();

    CLI::App* cut = app.add_subcommand("cut", "lower/upper cut of a poset without isolated "
                                              "elements");
    cut->add_option("file", file, "poset file, or - for stdin")->required();

    CLI::App* mso = app.add_subcommand("mso", "exhaustive second-order membership check with "
                                              "per-component witness lower sets");
    mso->add_option("file", file, "ternary structure file, or - for stdin")->required();
    mso->add_option("--max-component", max_component,
                    "largest component the subset search will attempt (default "
                    "BETPO_MAX_COMPONENT or 16)");

    CLI::App* rec = app.add_subcommand("reconstructible", "is the poset determined, up to "
                                                          "reversal, by its betweenness");
    rec->add_option("file", file, "poset file, or - for stdin")->required();

    CLI::App* ext = app.add_subcommand("ext", "graph on the extremal elements of a structure");
    ext->add_option("file", file, "ternary structure file, or - for stdin")->required();
    ext->add_flag("--dot", dot, "emit DOT instead of a vertex/edge listing");

    CLI::App* gen = app.add_subcommand("gen", "write a named example to stdout");
    gen->require_subcommand(1);
    CLI::App* gen_bcycle = gen->add_subcommand("bcycle", "cyclic ternary structure on 2K "
                                                         "vertices");
    gen_bcycle->add_option("K", param_n, "number of segments")->required();
    CLI::App* gen_fence = gen->add_subcommand("fence", "zigzag poset whose betweenness is "
                                                       "bcycle K (K even)");
    gen_fence->add_option("K", param_n, "number of segments")->required();
    CLI::App* gen_chain = gen->add_subcommand("chain", "linear order on N vertices");
    gen_chain->add_option("N", param_n, "vertex count")->required();
    gen->add_subcommand("example3", "six-element poset with a comparable pair on no 3-chain");
    gen->add_subcommand("example5", "connected poset whose betweenness splits in two");
    CLI::App* gen_random = gen->add_subcommand("random", "transitive closure of a seeded "
                                                         "random DAG");
    gen_random->add_option("N", param_n, "vertex count")->required();
    gen_random->add_option("P", param_p, "pair probability in [0,1]")->required();
    gen_random->add_option("SEED", param_seed, "RNG seed")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth at small sizes");
    oracle->require_subcommand(1);
    CLI::App* oracle_scan = oracle->add_subcommand(
        "scan", "sweep all reversal-closed structures on N vertices against enumeration");
    oracle_scan->add_option("N", param_n, "vertex count (at most 4)")->required();
    CLI::App* oracle_count = oracle->add_subcommand(
        "count", "number of posets whose betweenness equals the given structure");
    oracle_count->add_option("file", file, "ternary structure file, or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(file, emit, all_solutions);
        if (*bet) return run_bet(file);
        if (*minimize) return run_minimize(file);
        if (*cut) return run_cut(file);
        if (*mso) return run_mso(file, max_component);
        if (*rec) return run_reconstructible(file);
        if (*ext) return run_ext(file, dot);
        if (*gen) {
            if (*gen_bcycle) {
                betpo::print_structure(std::cout, betpo::b_cycle(param_n));
            } else if (*gen_fence) {
                betpo::print_poset(std::cout, betpo::fence_poset(param_n));
            } else if (*gen_chain) {
                betpo::print_poset(std::cout, betpo::chain(param_n));
            } else if (gen->get_subcommand("example3")->parsed()) {
                betpo::print_poset(std::cout, betpo::example3());
            } else if (gen->get_subcommand("example5")->parsed()) {
                betpo::print_poset(std::cout, betpo::example5());
            } else {
                betpo::print_poset(std::cout,
                                   betpo::random_poset(param_n, param_p, param_seed));
            }
            return kExitOk;
        }
        if (*oracle) {
            if (*oracle_scan) return run_oracle_scan(param_n);
            return run_oracle_count(file);
        }
    } catch (const betpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
