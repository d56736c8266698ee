#include "hamcount/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>

#include "hamcount/identities.hpp"
#include "hamcount/io.hpp"
#include "hamcount/linalg.hpp"
#include "hamcount/permutations.hpp"

namespace hamcount {

std::uint64_t verify_matrix_seed(std::uint64_t base_seed, std::uint64_t check_id, int n,
                                 int sample) {
    // splitmix64 finalizer over a mixed key: distinct (check, n, sample)
    // triples land on unrelated streams.
    std::uint64_t z = base_seed;
    z += 0x9e3779b97f4a7c15ULL * (check_id + 1);
    z += 0xc2b2ae3d27d4eb4fULL * static_cast<std::uint64_t>(n + 1);
    z += 0x165667b19e3779f9ULL * static_cast<std::uint64_t>(sample + 1);
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

SquareMatrix verify_sample_matrix(std::uint64_t matrix_seed, int n, long lo, long hi) {
    std::mt19937_64 rng(matrix_seed);
    return random_matrix(rng, n, lo, hi);
}

namespace {

struct Ctx {
    const VerifyOptions& opt;
    VerifyResult& res;
    std::ostream& log;
};

void report(Ctx& c, const std::string& name, const std::optional<std::string>& failure) {
    ++c.res.checks;
    if (!failure) {
        c.log << "ok   " << name << "\n";
    } else {
        ++c.res.failures;
        c.res.failure_lines.push_back(name + ": " + *failure);
        c.log << "FAIL " << name << ": " << *failure << "\n";
    }
}

// Random-matrix sweep: body(a, rng) -> true on pass. Failures name the
// per-matrix seed so `verify_sample_matrix(seed, n, lo, hi)` reproduces the
// offending input exactly.
template <class Body>
void sweep(Ctx& c, std::uint64_t check_id, const std::string& name, int n_lo, int n_hi,
           Body body) {
    std::optional<std::string> failure;
    for (int n = n_lo; n <= n_hi && !failure; ++n) {
        for (int t = 0; t < c.opt.samples && !failure; ++t) {
            const std::uint64_t seed = verify_matrix_seed(c.opt.seed, check_id, n, t);
            std::mt19937_64 rng(seed);
            const SquareMatrix a = random_matrix(rng, n, c.opt.entry_lo, c.opt.entry_hi);
            if (!body(a, rng))
                failure = "n=" + std::to_string(n) + " sample=" + std::to_string(t) +
                          " seed=" + std::to_string(seed);
        }
    }
    report(c, name + " (n " + std::to_string(n_lo) + ".." + std::to_string(n_hi) + ", " +
                  std::to_string(c.opt.samples) + " samples)",
           failure);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::vector<BigInt> random_values(int n, std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<BigInt> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = dist(rng);
    return x;
}

// Random polynomial in x(1..3) with a couple of edge variables mixed in;
// exercises the derivative and evaluation paths on non-listing shapes.
MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 2), nterms(1, 5), idx(1, 3);
    MultiPoly p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (int v = 1; v <= 3; ++v) {
            const int e = expo(rng);
            for (int r = 0; r < e; ++r) m = m * Monomial::vertex(v);
        }
        if (expo(rng) > 0) m = m * Monomial::edge(idx(rng), idx(rng));
        p += MultiPoly::term(m, coeff(rng));
    }
    return p;
}

void check_linalg(Ctx& c) {
    const int cap7 = std::min(c.opt.max_n, 7);
    const int cap6 = std::min(c.opt.max_n, 6);
    const OracleCaps& oc = c.opt.oracle_caps;

    sweep(c, 1, "det matches permutation expansion", 1, cap7,
          [&](const SquareMatrix& a, std::mt19937_64&) { return det(a) == det_leibniz(a, oc); });

    sweep(c, 2, "per matches permutation expansion", 1, cap7,
          [&](const SquareMatrix& a, std::mt19937_64&) { return per(a) == per_leibniz(a, oc); });

    sweep(c, 3, "det of negated principal submatrix flips sign by cardinality", 1, cap6,
          [&](const SquareMatrix& a, std::mt19937_64&) {
              const std::uint64_t full = IndexSet::full(a.size()).bits();
              for (std::uint64_t mask = 0; mask <= full; ++mask) {
                  const IndexSet s(mask, a.size());
                  const BigInt lhs = det(negated(principal_submatrix(a, s)));
                  const BigInt rhs = (s.size() % 2 ? -1 : 1) * det(principal_submatrix(a, s));
                  if (lhs != rhs) return false;
              }
              return true;
          });

    sweep(c, 4, "det and per agree on diagonal matrices", 1, cap7,
          [&](const SquareMatrix& a, std::mt19937_64&) {
              std::vector<BigInt> d(static_cast<std::size_t>(a.size()));
              for (int i = 1; i <= a.size(); ++i) d[static_cast<std::size_t>(i - 1)] = a.at(i, i);
              const SquareMatrix diag = diagonal_matrix(d);
              return det(diag) == per(diag);
          });

    sweep(c, 5, "det and per are transpose invariant", 1, cap7,
          [&](const SquareMatrix& a, std::mt19937_64&) {
              const SquareMatrix t = transpose(a);
              return det(a) == det(t) && per(a) == per(t);
          });

    {
        const SquareMatrix empty(0);
        std::optional<std::string> failure;
        if (det(empty) != 1 || per(empty) != 1 || det_leibniz(empty, oc) != 1 ||
            per_leibniz(empty, oc) != 1)
            failure = "value differs from 1";
        report(c, "empty matrix determinant and permanent are 1", failure);
    }
}

void check_identities(Ctx& c) {
    const OracleCaps& oc = c.opt.oracle_caps;
    const int threads = c.opt.threads;

    sweep(c, 7, "cycle identity matches brute force", 1, std::min(c.opt.max_n, 8),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return hc_count_identity(a, threads).count == hc_bruteforce(a, oc);
          });

    sweep(c, 8, "path identity matches brute force", 2, std::min(c.opt.max_n, 7),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return hp_count_identity(a, threads).count == hp_bruteforce(a, oc);
          });

    sweep(c, 9, "tree count matches brute force", 1, std::min(c.opt.max_n, 6),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return tree_count_tdmtt(a).count == tree_bruteforce(a, oc);
          });

    sweep(c, 10, "cycle count ignores the diagonal", 2, std::min(c.opt.max_n, 8),
          [&](const SquareMatrix& a, std::mt19937_64& rng) {
              std::uniform_int_distribution<long> dist(c.opt.entry_lo, c.opt.entry_hi);
              SquareMatrix b = a;
              for (int i = 1; i <= a.size(); ++i) b.at(i, i) = dist(rng);
              return hc_count_identity(a, threads).count == hc_count_identity(b, threads).count;
          });

    sweep(c, 11, "full-range subset sum cancels to zero", 1, std::min(c.opt.max_n, 7),
          [&](const SquareMatrix& a, std::mt19937_64&) { return hc_full_range_sum(a) == 0; });

    sweep(c, 12, "cycle count is relabeling invariant", 1, std::min(c.opt.max_n, 7),
          [&](const SquareMatrix& a, std::mt19937_64& rng) {
              const std::vector<int> p = random_permutation(a.size(), rng);
              return hc_count_identity(relabel(a, p), threads).count ==
                     hc_count_identity(a, threads).count;
          });

    sweep(c, 13, "cycle count is transpose invariant", 1, std::min(c.opt.max_n, 7),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return hc_count_identity(transpose(a), threads).count ==
                     hc_count_identity(a, threads).count;
          });

    sweep(c, 14, "subset expansion equals det of diagonally perturbed matrix", 1,
          std::min(c.opt.max_n, 7), [&](const SquareMatrix& a, std::mt19937_64& rng) {
              const std::vector<BigInt> x =
                  random_values(a.size(), rng, c.opt.entry_lo, c.opt.entry_hi);
              SquareMatrix b = a;
              for (int i = 1; i <= a.size(); ++i)
                  b.at(i, i) += x[static_cast<std::size_t>(i - 1)];
              return det_sum_expand(a, x, IndexSet::full(a.size())) == det(b);
          });

    sweep(c, 15, "path identity diagonal pairs vanish", 2, std::min(c.opt.max_n, 6),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return hp_diagonal_pair_sum(a) == 0;
          });

    sweep(c, 16, "rooted tree counts sum to the total", 1, std::min(c.opt.max_n, 6),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              BigInt total = 0;
              for (int r = 1; r <= a.size(); ++r) total += tree_count_rooted(a, r);
              return total == tree_count_tdmtt(a).count;
          });

    sweep(c, 17, "subset partitioning is thread-count independent", 1, std::min(c.opt.max_n, 8),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              const CountReport one = hc_count_identity(a, 1);
              const CountReport four = hc_count_identity(a, 4);
              return one.count == four.count && one.terms_evaluated == four.terms_evaluated;
          });

    {
        std::optional<std::string> failure;
        for (int n = 1; n <= std::min(c.opt.max_n, 6) && !failure; ++n) {
            for_each_permutation(n, [&](const std::vector<int>& p) {
                if (is_single_cycle(p) != (cycle_count(p) == 1))
                    failure = "n=" + std::to_string(n);
            });
        }
        report(c, "single-cycle test agrees with cycle counting (n 1.." +
                      std::to_string(std::min(c.opt.max_n, 6)) + ")",
               failure);
    }
}

void check_symbolic(Ctx& c) {
    const SymbolicCaps& sc = c.opt.sym_caps;

    {
        std::optional<std::string> failure;
        for (int n = 1; n <= std::min(c.opt.max_n, sc.identity) && !failure; ++n) {
            const MultiPoly expanded = sym_hc_identity_expand(n, sc);
            const MultiPoly listed = sym_hc_listing(n, sc);
            if (expanded != listed) {
                failure = "n=" + std::to_string(n) + " polynomials differ";
                break;
            }
            BigInt fact = 1;
            for (int k = 2; k < n; ++k) fact *= k;
            if (expanded.term_count() != fact)
                failure = "n=" + std::to_string(n) + " term count differs from (n-1)!";
            for (const auto& [m, coeff] : expanded.terms())
                if (coeff != 1) failure = "n=" + std::to_string(n) + " coefficient differs from 1";
        }
        report(c, "subset expansion collapses to the cycle listing (n 1.." +
                      std::to_string(std::min(c.opt.max_n, sc.identity)) + ")",
               failure);
    }

    {
        std::optional<std::string> failure;
        const int hi = std::min({c.opt.max_n, sc.leibniz, 5});
        for (int n = 1; n <= hi && !failure; ++n) {
            const MultiPoly trees = sym_tdmtt(n, sc);
            for (const auto& [m, coeff] : trees.terms())
                if (coeff != 1) failure = "n=" + std::to_string(n) + " coefficient differs from 1";
            std::set<Monomial> expected;
            std::vector<int> image(static_cast<std::size_t>(n), 1);
            while (true) {
                if (is_functional_tree({n, image})) {
                    Monomial m;
                    for (int i = 1; i <= n; ++i)
                        m = m * Monomial::edge(i, image[static_cast<std::size_t>(i - 1)]);
                    expected.insert(m);
                }
                int k = n - 1;
                while (k >= 0 && image[static_cast<std::size_t>(k)] == n)
                    image[static_cast<std::size_t>(k--)] = 1;
                if (k < 0) break;
                ++image[static_cast<std::size_t>(k)];
            }
            std::set<Monomial> got;
            for (const auto& [m, coeff] : trees.terms()) got.insert(m);
            if (got != expected)
                failure = "n=" + std::to_string(n) + " monomial set differs from enumeration";
        }
        report(c, "tree listing enumerates exactly the rooted functional trees (n 1.." +
                      std::to_string(hi) + ")",
               failure);
    }

    {
        std::optional<std::string> failure;
        const int hi = std::min(c.opt.max_n, sc.derivative);
        for (int n = 1; n <= hi && !failure; ++n)
            if (sym_hc_derivative_form(n, sc) != sym_hc_listing(n, sc))
                failure = "n=" + std::to_string(n);
        report(c, "derivative construction reproduces the cycle listing (n 1.." +
                      std::to_string(hi) + ")",
               failure);
    }

    {
        std::optional<std::string> failure;
        const int hi = std::min(c.opt.max_n, sc.identity);
        for (int n = 1; n <= hi && !failure; ++n)
            if (!sym_det_sum_lemma_check(n, sc)) failure = "n=" + std::to_string(n);
        report(c, "diagonal perturbation of det expands over principal minors (n 1.." +
                      std::to_string(hi) + ")",
               failure);
    }

    {
        std::optional<std::string> failure;
        for (int t = 0; t < c.opt.samples && !failure; ++t) {
            const std::uint64_t seed = verify_matrix_seed(c.opt.seed, 23, 3, t);
            std::mt19937_64 rng(seed);
            const MultiPoly p = random_poly(rng), q = random_poly(rng);
            const std::vector<int> all = {1, 2, 3};
            MultiPoly rhs;
            for (std::uint64_t mask = 0; mask < 8; ++mask) {
                std::vector<int> s, rest;
                for (int v = 1; v <= 3; ++v)
                    (mask >> (v - 1) & 1 ? s : rest).push_back(v);
                rhs += partial_derivative(p, s) * partial_derivative(q, rest);
            }
            if (partial_derivative(p * q, all) != rhs)
                failure = "sample=" + std::to_string(t) + " seed=" + std::to_string(seed);
        }
        report(c, "iterated derivative of a product obeys the subset expansion", failure);
    }

    {
        std::optional<std::string> failure;
        const int n = std::min({c.opt.max_n, sc.leibniz, 4});
        for (int t = 0; t < c.opt.samples && !failure; ++t) {
            const std::uint64_t seed = verify_matrix_seed(c.opt.seed, 24, n, t);
            std::mt19937_64 rng(seed);
            const SquareMatrix a = random_matrix(rng, n, c.opt.entry_lo, c.opt.entry_hi);
            const std::vector<BigInt> x = random_values(3, rng, c.opt.entry_lo, c.opt.entry_hi);
            const SymMatrix g = SymMatrix::generic(n);
            const MultiPoly p = random_poly(rng), q = random_poly(rng);
            const bool ok = sym_det(g, sc).evaluate(a, x) == det(a) &&
                            sym_per(g, sc).evaluate(a, x) == per(a) &&
                            (p + q).evaluate(a, x) == p.evaluate(a, x) + q.evaluate(a, x) &&
                            (p * q).evaluate(a, x) == p.evaluate(a, x) * q.evaluate(a, x) &&
                            p.derivative(1).evaluate(a, x) ==
                                partial_derivative(p, {1}).evaluate(a, x);
            if (!ok) failure = "sample=" + std::to_string(t) + " seed=" + std::to_string(seed);
        }
        report(c, "evaluation commutes with polynomial operations", failure);
    }

    {
        std::optional<std::string> failure;
        for (int t = 0; t < c.opt.samples && !failure; ++t) {
            const std::uint64_t seed = verify_matrix_seed(c.opt.seed, 25, 4, t);
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<int> idx(1, 4), reps(1, 6);
            Monomial m;
            const int k = reps(rng);
            for (int r = 0; r < k; ++r) m = m * Monomial::edge(idx(rng), idx(rng));
            const MultiPoly marked = apply_indegree_marking(MultiPoly::term(m, 1));
            if (marked.term_count() != 1) {
                failure = "marking changed the term count";
                break;
            }
            const Monomial& got = marked.terms().begin()->first;
            for (int v = 1; v <= 4; ++v)
                if (got.exponent_of_vertex(v) != m.in_degree(v))
                    failure = "sample=" + std::to_string(t) + " seed=" + std::to_string(seed);
        }
        report(c, "in-degree marking records exponents correctly", failure);
    }

    sweep(c, 26, "matrix text form round-trips", 1, std::min(c.opt.max_n, 8),
          [&](const SquareMatrix& a, std::mt19937_64&) {
              return parse_matrix(render_matrix(a)) == a;
          });
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opt, std::ostream& log) {
    VerifyResult res;
    Ctx c{opt, res, log};
    check_linalg(c);
    check_identities(c);
    check_symbolic(c);
    log << (res.ok() ? "all " + std::to_string(res.checks) + " checks passed"
                     : std::to_string(res.failures) + " of " + std::to_string(res.checks) +
                           " checks failed")
        << "\n";
    return res;
}

}  // namespace hamcount
