// Acceptance suite: exercises the engine end to end and prints one PASS/FAIL
// line per criterion. Exits 0 iff everything passes. argv[1] must be the
// path to the hamcount binary for the CLI checks.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hamcount/identities.hpp"
#include "hamcount/io.hpp"
#include "hamcount/linalg.hpp"
#include "hamcount/oracles.hpp"
#include "hamcount/symbolic.hpp"
#include "hamcount/verify.hpp"

using namespace hamcount;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& command) {
    CliResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

double best_of(int runs, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < runs; ++i) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, seconds_since(t0) * 1000.0);
    }
    return best;
}

void criterion_cycle_example() {
    BigInt count;
    const double ms = best_of(5, [&] { count = hc_count_identity(all_ones(3)).count; });
    report("three-vertex cycle count", count == 2 && ms < 1.0,
           "count=" + count.str() + ", " + std::to_string(ms) + " ms");
}

void criterion_tree_example() {
    BigInt total, rooted;
    const double ms = best_of(5, [&] {
        total = tree_count_tdmtt(all_ones(3)).count;
        rooted = tree_count_rooted(all_ones(3), 1);
    });
    report("three-vertex tree counts", total == 9 && rooted == 3 && ms < 1.0,
           "total=" + total.str() + ", rooted=" + rooted.str() + ", " + std::to_string(ms) +
               " ms");
}

void criterion_oracle_agreement() {
    const auto t0 = Clock::now();
    const int samples = 500;
    std::string mismatch;

    for (int n = 1; n <= 8 && mismatch.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0001u + static_cast<unsigned>(n));
        for (int t = 0; t < samples; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            if (hc_count_identity(a).count != hc_bruteforce(a)) {
                mismatch = "cycles n=" + std::to_string(n) + " sample=" + std::to_string(t);
                break;
            }
        }
    }
    for (int n = 2; n <= 7 && mismatch.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0002u + static_cast<unsigned>(n));
        for (int t = 0; t < samples; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            if (hp_count_identity(a).count != hp_bruteforce(a)) {
                mismatch = "paths n=" + std::to_string(n) + " sample=" + std::to_string(t);
                break;
            }
        }
    }
    for (int n = 1; n <= 6 && mismatch.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0003u + static_cast<unsigned>(n));
        for (int t = 0; t < samples; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            if (tree_count_tdmtt(a).count != tree_bruteforce(a)) {
                mismatch = "trees n=" + std::to_string(n) + " sample=" + std::to_string(t);
                break;
            }
        }
    }

    const double s = seconds_since(t0);
    report("identity vs brute force, 500 matrices per size",
           mismatch.empty() && s <= 300.0,
           mismatch.empty() ? fmt_seconds(s) : mismatch);
}

void criterion_symbolic_expansion() {
    const auto t0 = Clock::now();
    std::string failure;
    for (int n = 1; n <= 5 && failure.empty(); ++n) {
        const MultiPoly expanded = sym_hc_identity_expand(n);
        if (expanded != sym_hc_listing(n)) {
            failure = "n=" + std::to_string(n) + " differs from the listing";
            break;
        }
        BigInt fact = 1;
        for (int k = 2; k < n; ++k) fact *= k;
        if (expanded.term_count() != fact) failure = "n=" + std::to_string(n) + " term count";
        for (const auto& [m, c] : expanded.terms())
            if (c != 1) failure = "n=" + std::to_string(n) + " coefficient";
    }
    const double s = seconds_since(t0);
    report("subset expansion equals the cycle listing, n 1..5",
           failure.empty() && s <= 60.0, failure.empty() ? fmt_seconds(s) : failure);
}

void criterion_derivative_and_lemma() {
    const auto t0 = Clock::now();
    std::string failure;
    for (int n = 2; n <= 4 && failure.empty(); ++n)
        if (sym_hc_derivative_form(n) != sym_hc_listing(n))
            failure = "derivative form n=" + std::to_string(n);
    for (int n = 1; n <= 4 && failure.empty(); ++n)
        if (!sym_det_sum_lemma_check(n)) failure = "perturbation lemma n=" + std::to_string(n);
    const double s = seconds_since(t0);
    report("derivative construction and perturbation lemma",
           failure.empty() && s <= 120.0, failure.empty() ? fmt_seconds(s) : failure);
}

void criterion_cancellation() {
    const auto t0 = Clock::now();
    std::string failure;

    for (int n = 1; n <= 7 && failure.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0006u + static_cast<unsigned>(n));
        for (int t = 0; t < 200; ++t) {
            if (hc_full_range_sum(random_matrix(rng, n)) != 0) {
                failure = "full-range sum n=" + std::to_string(n);
                break;
            }
        }
    }
    for (int n = 2; n <= 7 && failure.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0007u + static_cast<unsigned>(n));
        std::uniform_int_distribution<long> dist(-9, 9);
        for (int t = 0; t < 50; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            SquareMatrix b = a;
            for (int i = 1; i <= n; ++i) b.at(i, i) = dist(rng);
            if (hc_count_identity(a).count != hc_count_identity(b).count) {
                failure = "diagonal perturbation n=" + std::to_string(n);
                break;
            }
        }
    }
    for (int n = 2; n <= 6 && failure.empty(); ++n) {
        std::mt19937_64 rng(0xACCE0008u + static_cast<unsigned>(n));
        for (int t = 0; t < 100; ++t) {
            if (hp_diagonal_pair_sum(random_matrix(rng, n)) != 0) {
                failure = "path diagonal pairs n=" + std::to_string(n);
                break;
            }
        }
    }

    const double s = seconds_since(t0);
    report("cancellation sweeps", failure.empty() && s <= 120.0,
           failure.empty() ? fmt_seconds(s) : failure);
}

void criterion_scale() {
    std::mt19937_64 rng(0xACCE0009u);
    const SquareMatrix big = random_matrix(rng, 16);

    const auto t0 = Clock::now();
    const CountReport single = hc_count_identity(big, 1);
    const double single_s = seconds_since(t0);

    const CountReport parallel = hc_count_identity(big, 4);
    const bool same = parallel.count == single.count;

    const BigInt twelve = hc_count_identity(complete_loopless(12), 4).count;

    report("16x16 within budget and 12-vertex closed form",
           single_s <= 60.0 && same && twelve == 39916800,
           "16x16 in " + fmt_seconds(single_s) + ", threads agree=" +
               (same ? "yes" : "no") + ", 12-vertex count=" + twelve.str());
}

void criterion_cli(const std::string& bin) {
    std::string failure;

    const CliResult verify = run_cli(bin + " verify --max-n 6 >/dev/null");
    if (verify.exit_code != 0)
        failure = "verify exited " + std::to_string(verify.exit_code);

    if (failure.empty()) {
        std::mt19937_64 rng(0xACCE000Au);
        for (int t = 0; t < 100; ++t) {
            std::uniform_int_distribution<int> dim(1, 8);
            const SquareMatrix a = random_matrix(rng, dim(rng), -1000000, 1000000);
            if (parse_matrix(render_matrix(a)) != a) {
                failure = "round-trip sample " + std::to_string(t);
                break;
            }
        }
    }

    if (failure.empty()) {
        // a count that a double would round: 15^14 rooted trees on all-ones
        {
            std::ofstream f("acceptance_j15.txt");
            f << render_matrix(all_ones(15));
        }
        const CliResult r = run_cli(bin + " trees acceptance_j15.txt --format json");
        std::remove("acceptance_j15.txt");
        BigInt expect = 1;
        for (int k = 0; k < 14; ++k) expect *= 15;
        try {
            const nlohmann::json j = nlohmann::json::parse(r.out);
            if (!j.at("count").is_string())
                failure = "count is not a string";
            else if (j.at("count").get<std::string>() != expect.str())
                failure = "count " + j.at("count").get<std::string>() + " != " + expect.str();
            else if (!j.at("method").is_string() || !j.at("elapsed_ms").is_number() ||
                     j.at("n").get<int>() != 15)
                failure = "report schema";
        } catch (const std::exception& e) {
            failure = std::string("json: ") + e.what();
        }
    }

    report("command-line contract", failure.empty(), failure);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-hamcount>\n";
        return 2;
    }

    criterion_cycle_example();
    criterion_tree_example();
    criterion_oracle_agreement();
    criterion_symbolic_expansion();
    criterion_derivative_and_lemma();
    criterion_cancellation();
    criterion_scale();
    criterion_cli(argv[1]);

    if (g_failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
}
