#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamcount/errors.hpp"
#include "hamcount/identities.hpp"
#include "hamcount/io.hpp"
#include "hamcount/oracles.hpp"
#include "hamcount/symbolic.hpp"
#include "hamcount/verify.hpp"

namespace {

using hamcount::BigInt;
using hamcount::CountMethod;
using hamcount::CountReport;
using hamcount::SquareMatrix;

bool g_json = false;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw hamcount::Error("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

bool is_integer_text(const std::string& s) {
    std::size_t i = s.size() && (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_bigint_flag(const std::string& s, const char* flag) {
    if (!is_integer_text(s))
        throw hamcount::Error(std::string(flag) + " expects an integer, got '" + s + "'");
    return BigInt(s);
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t power_u64(int n) {
    std::uint64_t p = 1;
    for (int k = 0; k < n; ++k) p *= static_cast<std::uint64_t>(n);
    return p;
}

template <class F>
CountReport timed_report(int n, CountMethod m, std::uint64_t terms, F f) {
    const auto t0 = std::chrono::steady_clock::now();
    BigInt count = f();
    const auto t1 = std::chrono::steady_clock::now();
    return {n, std::move(count), m, t1 - t0, terms};
}

void emit_report(const CountReport& r) {
    if (g_json) {
        const nlohmann::json j{
            {"n", r.n},
            {"method", std::string(method_name(r.method))},
            {"count", r.count.str()},
            {"terms_evaluated", r.terms_evaluated},
            {"elapsed_ms", r.elapsed.count()},
        };
        std::cout << j.dump() << "\n";
    } else {
        std::cout << r.count.str() << "\n";
        std::cerr << "method=" << method_name(r.method) << " terms=" << r.terms_evaluated
                  << " elapsed_ms=" << std::fixed << std::setprecision(3) << r.elapsed.count()
                  << "\n";
    }
}

void emit_error(const std::string& message) {
    if (g_json)
        std::cout << nlohmann::json{{"error", message}}.dump() << "\n";
    else
        std::cerr << "error: " << message << "\n";
}

enum class Family { cycles, paths, trees };

struct CountArgs {
    std::string input;
    bool brute = false;
    bool undirected = false;
    std::string diag;         // paths: uniform diagonal override
    std::string root_weight;  // trees: uniform diagonal override
    int root = 0;             // trees: single-root count
};

void run_count(Family fam, const CountArgs& args, int threads) {
    SquareMatrix a = hamcount::parse_graph(read_input(args.input)).matrix;
    if (args.undirected) a = mirror_directed_edges(a);
    if (!args.diag.empty())
        a = with_uniform_diagonal(a, parse_bigint_flag(args.diag, "--diag"));
    if (!args.root_weight.empty())
        a = with_uniform_diagonal(a, parse_bigint_flag(args.root_weight, "--root-weight"));

    const int n = a.size();
    CountReport r;
    switch (fam) {
        case Family::cycles:
            r = args.brute ? timed_report(n, CountMethod::hc_bruteforce, factorial_u64(n),
                                          [&] { return hc_bruteforce(a); })
                           : hc_count_identity(a, threads);
            break;
        case Family::paths:
            r = args.brute ? timed_report(n, CountMethod::hp_bruteforce, factorial_u64(n),
                                          [&] { return hp_bruteforce(a); })
                           : hp_count_identity(a, threads);
            break;
        case Family::trees:
            if (args.root > 0)
                r = timed_report(n, CountMethod::tree_tdmtt, 1,
                                 [&] { return tree_count_rooted(a, args.root); });
            else if (args.brute)
                r = timed_report(n, CountMethod::tree_bruteforce, power_u64(n),
                                 [&] { return tree_bruteforce(a); });
            else
                r = tree_count_tdmtt(a);
            break;
    }
    emit_report(r);
}

struct ListArgs {
    std::string family;
    int n = 0;
};

void run_list(const ListArgs& args) {
    hamcount::MultiPoly p;
    if (args.family == "cycles")
        p = hamcount::sym_hc_listing(args.n);
    else if (args.family == "trees")
        p = hamcount::sym_tdmtt(args.n);
    else
        p = hamcount::sym_hc_identity_expand(args.n);
    const std::vector<std::string> lines = p.to_lines();
    if (g_json) {
        std::cout << nlohmann::json{{"family", args.family}, {"n", args.n}, {"terms", lines}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
}

int run_verify_cmd(const hamcount::VerifyOptions& opt) {
    if (g_json) {
        std::ostringstream log;
        const hamcount::VerifyResult res = hamcount::run_verify(opt, log);
        std::cout << nlohmann::json{{"ok", res.ok()},
                                    {"checks", res.checks},
                                    {"failures", res.failures},
                                    {"failure_lines", res.failure_lines}}
                         .dump()
                  << "\n";
        return res.ok() ? 0 : 1;
    }
    const hamcount::VerifyResult res = hamcount::run_verify(opt, std::cout);
    return res.ok() ? 0 : 1;
}

struct BenchArgs {
    int min_n = 2;
    int max_n = 10;
    std::uint64_t seed = 20240915;
};

void run_bench(const BenchArgs& args, int threads) {
    nlohmann::json rows = nlohmann::json::array();
    if (!g_json)
        std::cout << std::setw(3) << "n" << std::setw(20) << "count" << std::setw(14)
                  << "identity_ms" << std::setw(14) << "brute_ms" << std::setw(7) << "agree"
                  << "\n";
    const int brute_cap = hamcount::OracleCaps{}.factorial_cap;
    for (int n = args.min_n; n <= args.max_n; ++n) {
        std::mt19937_64 rng(args.seed + static_cast<std::uint64_t>(n));
        const SquareMatrix a = hamcount::random_matrix(rng, n);
        const CountReport id = hamcount::hc_count_identity(a, threads);
        const bool can_brute = n <= brute_cap;
        CountReport br;
        if (can_brute)
            br = timed_report(n, CountMethod::hc_bruteforce, factorial_u64(n),
                              [&] { return hc_bruteforce(a); });
        const bool agree = can_brute && br.count == id.count;
        if (g_json) {
            nlohmann::json row{{"n", n},
                               {"count", id.count.str()},
                               {"identity_ms", id.elapsed.count()}};
            row["brute_ms"] = can_brute ? nlohmann::json(br.elapsed.count()) : nlohmann::json();
            row["agree"] = can_brute ? nlohmann::json(agree) : nlohmann::json();
            rows.push_back(std::move(row));
        } else {
            std::cout << std::setw(3) << n << std::setw(20) << id.count.str() << std::setw(14)
                      << std::fixed << std::setprecision(2) << id.elapsed.count();
            if (can_brute)
                std::cout << std::setw(14) << br.elapsed.count() << std::setw(7)
                          << (agree ? "yes" : "no");
            else
                std::cout << std::setw(14) << "-" << std::setw(7) << "-";
            std::cout << "\n";
        }
    }
    if (g_json) std::cout << rows.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamiltonian cycle, path, and rooted spanning tree counts on weighted digraphs"};
    app.require_subcommand(1);

    std::string format = "text";
    int threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads for subset sums")
        ->envname("HAMCOUNT_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CountArgs cycles_args, paths_args, trees_args;

    CLI::App* cycles = app.add_subcommand("cycles", "count Hamiltonian cycles");
    cycles->fallthrough();
    cycles->add_option("input", cycles_args.input, "matrix or edge-list file, '-' for stdin")
        ->required();
    cycles->add_flag("--brute", cycles_args.brute, "use the brute-force enumerator");
    cycles->add_flag("--undirected", cycles_args.undirected,
                     "mirror each edge before counting (counts both directions)");

    CLI::App* paths = app.add_subcommand("paths", "count spanning functional paths");
    paths->fallthrough();
    paths->add_option("input", paths_args.input, "matrix or edge-list file, '-' for stdin")
        ->required();
    paths->add_flag("--brute", paths_args.brute, "use the brute-force enumerator");
    paths->add_flag("--undirected", paths_args.undirected,
                    "mirror each edge before counting (counts both directions)");
    paths->add_option("--diag", paths_args.diag,
                      "overwrite every diagonal entry before counting (use 1 for plain path "
                      "counts on loopless graphs)");

    CLI::App* trees = app.add_subcommand("trees", "count rooted spanning functional trees");
    trees->fallthrough();
    trees->add_option("input", trees_args.input, "matrix or edge-list file, '-' for stdin")
        ->required();
    CLI::Option* trees_brute =
        trees->add_flag("--brute", trees_args.brute, "use the brute-force enumerator");
    trees->add_flag("--undirected", trees_args.undirected,
                    "mirror each edge before counting (counts both directions)");
    trees->add_option("--root-weight", trees_args.root_weight,
                      "overwrite every diagonal entry before counting (use 1 for arborescences "
                      "of loopless digraphs)");
    trees->add_option("--root", trees_args.root, "count only trees rooted at this vertex")
        ->check(CLI::PositiveNumber)
        ->excludes(trees_brute);

    hamcount::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run the full self-check suite");
    verify->fallthrough();
    verify->add_option("--max-n", verify_opt.max_n, "largest dimension to sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--samples", verify_opt.samples, "random matrices per check and size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", verify_opt.seed, "base seed for the random sweeps")
        ->capture_default_str();

    ListArgs list_args;
    CLI::App* list = app.add_subcommand("list", "print a symbolic listing, one term per line");
    list->fallthrough();
    list->add_option("family", list_args.family, "cycles | trees | identity")
        ->required()
        ->check(CLI::IsMember({"cycles", "trees", "identity"}));
    list->add_option("n", list_args.n, "number of vertices")
        ->required()
        ->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time the identity against brute force");
    bench->fallthrough();
    bench->add_option("--min-n", bench_args.min_n, "smallest dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--max-n", bench_args.max_n, "largest dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "seed for the random matrices")
        ->capture_default_str();

    int rc = 0;
    const auto sync_format = [&] { g_json = format == "json"; };
    cycles->callback([&] {
        sync_format();
        run_count(Family::cycles, cycles_args, threads);
    });
    paths->callback([&] {
        sync_format();
        run_count(Family::paths, paths_args, threads);
    });
    trees->callback([&] {
        sync_format();
        run_count(Family::trees, trees_args, threads);
    });
    list->callback([&] {
        sync_format();
        run_list(list_args);
    });
    verify->callback([&] {
        sync_format();
        verify_opt.threads = threads;
        rc = run_verify_cmd(verify_opt);
    });
    bench->callback([&] {
        sync_format();
        run_bench(bench_args, threads);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hamcount::Error& e) {
        g_json = format == "json";
        emit_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        g_json = format == "json";
        emit_error(e.what());
        return 2;
    }
    return rc;
}
