#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hamcount/identities.hpp"
#include "hamcount/linalg.hpp"
#include "hamcount/oracles.hpp"

using namespace hamcount;

TEST_CASE("cycle count on the worked examples") {
    const CountReport r3 = hc_count_identity(all_ones(3));
    CHECK(r3.count == 2);
    CHECK(r3.n == 3);
    CHECK(r3.terms_evaluated == 4);  // subsets of [n-1]
    CHECK(method_name(r3.method) == "hc_identity");

    CHECK(hc_count_identity(SquareMatrix::from_ints(1, {5})).count == 5);
    CHECK(hc_count_identity(complete_loopless(4)).count == 6);
    CHECK(hc_count_identity(complete_loopless(5)).count == 24);
    CHECK(hc_count_identity(identity_matrix(3)).count == 0);
}

TEST_CASE("path count on the worked examples") {
    const CountReport r2 = hp_count_identity(all_ones(2));
    CHECK(r2.count == 2);
    CHECK(r2.terms_evaluated == 2);  // ordered pairs of a 2-set times its supersets
    CHECK(method_name(r2.method) == "hp_identity");

    CHECK(hp_count_identity(all_ones(3)).count == 6);
    CHECK(hp_count_identity(SquareMatrix(3)).count == 0);
    CHECK_THROWS_AS(hp_count_identity(SquareMatrix::from_ints(1, {1})), ContractViolation);
}

TEST_CASE("tree count on the worked examples") {
    const CountReport r3 = tree_count_tdmtt(all_ones(3));
    CHECK(r3.count == 9);
    CHECK(r3.terms_evaluated == 3);  // one root term per vertex
    CHECK(method_name(r3.method) == "tree_tdmtt");

    CHECK(tree_count_tdmtt(SquareMatrix::from_ints(1, {12})).count == 12);
    CHECK(tree_count_tdmtt(all_ones(4)).count == 64);
}

TEST_CASE("rooted tree count") {
    CHECK(tree_count_rooted(all_ones(3), 1) == 3);
    for (int r = 1; r <= 4; ++r) CHECK(tree_count_rooted(all_ones(4), r) == 16);
    SquareMatrix a = all_ones(3);
    a.at(2, 2) = 0;
    CHECK(tree_count_rooted(a, 2) == 0);
    CHECK_THROWS_AS(tree_count_rooted(a, 0), ContractViolation);
    CHECK_THROWS_AS(tree_count_rooted(a, 4), ContractViolation);
}

TEST_CASE("row-sum matrix drops the diagonal of its input") {
    const SquareMatrix l = row_sum_laplacian(all_ones(3));
    CHECK(l == SquareMatrix::from_ints(3, {2, -1, -1, -1, 2, -1, -1, -1, 2}));
    CHECK(row_sum_laplacian(with_uniform_diagonal(all_ones(3), 7)) == l);
}

TEST_CASE("identities match their brute-force counterparts") {
    std::mt19937_64 rng(55001);
    for (int n = 1; n <= 7; ++n) {
        for (int t = 0; t < 25; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            CHECK(hc_count_identity(a).count == hc_bruteforce(a));
            if (n >= 2) CHECK(hp_count_identity(a).count == hp_bruteforce(a));
            if (n <= 6) CHECK(tree_count_tdmtt(a).count == tree_bruteforce(a));
        }
    }
}

TEST_CASE("cycle count is diagonal, relabeling, and transpose invariant") {
    std::mt19937_64 rng(55002);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int n = 2; n <= 7; ++n) {
        for (int t = 0; t < 10; ++t) {
            const SquareMatrix a = random_matrix(rng, n);
            const BigInt base = hc_count_identity(a).count;

            SquareMatrix shifted = a;
            for (int i = 1; i <= n; ++i) shifted.at(i, i) = dist(rng);
            CHECK(hc_count_identity(shifted).count == base);

            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(hc_count_identity(relabel(a, perm)).count == base);

            CHECK(hc_count_identity(transpose(a)).count == base);
        }
    }
}

TEST_CASE("unrestricted subset sum cancels to zero") {
    std::mt19937_64 rng(55003);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 25; ++t) CHECK(hc_full_range_sum(random_matrix(rng, n)) == 0);
}

TEST_CASE("the skipped diagonal path terms are identically zero") {
    std::mt19937_64 rng(55004);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 25; ++t) CHECK(hp_diagonal_pair_sum(random_matrix(rng, n)) == 0);
}

TEST_CASE("subset expansion of the perturbed determinant") {
    std::mt19937_64 rng(55005);
    std::uniform_int_distribution<long> dist(-9, 9);

    // zero matrix: only the empty subset survives, leaving prod x_i
    std::vector<BigInt> x = {2, 3, 5};
    CHECK(det_sum_expand(SquareMatrix(3), x, IndexSet::full(3)) == 30);

    // zero x: only the full subset survives, leaving det(A)
    const SquareMatrix c = random_matrix(rng, 4);
    CHECK(det_sum_expand(c, {0, 0, 0, 0}, IndexSet::full(4)) == det(c));

    for (int t = 0; t < 25; ++t) {
        const SquareMatrix a = random_matrix(rng, 5);
        std::vector<BigInt> v(5);
        for (auto& e : v) e = dist(rng);
        SquareMatrix perturbed = a;
        for (int i = 1; i <= 5; ++i) perturbed.at(i, i) += v[static_cast<std::size_t>(i - 1)];
        CHECK(det_sum_expand(a, v, IndexSet::full(5)) == det(perturbed));
    }

    CHECK_THROWS_AS(det_sum_expand(SquareMatrix(3), {1, 2}, IndexSet::full(3)),
                    ContractViolation);
}

TEST_CASE("subset partitioning across threads changes nothing") {
    std::mt19937_64 rng(55006);
    const SquareMatrix a = random_matrix(rng, 8);
    const CountReport base = hc_count_identity(a, 1);
    for (int threads : {2, 3, 4, 7}) {
        const CountReport r = hc_count_identity(a, threads);
        CHECK(r.count == base.count);
        CHECK(r.terms_evaluated == base.terms_evaluated);
    }
    const SquareMatrix b = random_matrix(rng, 6);
    CHECK(hp_count_identity(b, 4).count == hp_count_identity(b, 1).count);
    CHECK_THROWS_AS(hc_count_identity(a, 0), ContractViolation);
}

TEST_CASE("closed form on complete loopless digraphs") {
    // (n-1)! Hamiltonian cycles
    BigInt expect = 1;
    for (int k = 2; k <= 7; ++k) expect *= k;
    CHECK(hc_count_identity(complete_loopless(8)).count == expect);  // 7! = 5040
    CHECK(hc_count_identity(complete_loopless(8)).count == hc_bruteforce(complete_loopless(8)));
}

TEST_CASE("terms evaluated counts the summation lattice") {
    CHECK(hc_count_identity(all_ones(5)).terms_evaluated == 16);       // 2^(n-1)
    CHECK(hp_count_identity(all_ones(4)).terms_evaluated == 48);       // n(n-1) 2^(n-2)
    CHECK(tree_count_tdmtt(all_ones(5)).terms_evaluated == 5);         // n roots
}
