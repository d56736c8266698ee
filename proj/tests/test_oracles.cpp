#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hamcount/linalg.hpp"
#include "hamcount/oracles.hpp"
#include "hamcount/permutations.hpp"

using namespace hamcount;

TEST_CASE("permutation enumeration is lexicographic and complete") {
    std::vector<std::vector<int>> seen;
    for_each_permutation(3, [&](const std::vector<int>& p) { seen.push_back(p); });
    REQUIRE(seen.size() == 6);
    CHECK(seen.front() == std::vector<int>{0, 1, 2});
    CHECK(seen.back() == std::vector<int>{2, 1, 0});
    int count = 0;
    for_each_permutation(0, [&](const std::vector<int>& p) {
        CHECK(p.empty());
        ++count;
    });
    CHECK(count == 1);  // the empty permutation, so 0x0 expansions sum one term
}

TEST_CASE("cycle structure helpers") {
    CHECK(cycle_count({0, 1, 2}) == 3);
    CHECK(cycle_count({1, 0, 2}) == 2);
    CHECK(cycle_count({1, 2, 0}) == 1);
    CHECK(is_single_cycle({1, 2, 0}));
    CHECK(!is_single_cycle({0, 1, 2}));
    CHECK(is_single_cycle({0}));
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("functional tree recognition") {
    CHECK(is_functional_tree({3, {1, 1, 2}}));
    CHECK(tree_root({3, {1, 1, 2}}) == 1);
    CHECK(is_functional_tree({1, {1}}));
    CHECK(tree_root({1, {1}}) == 1);
    CHECK(!is_functional_tree({3, {1, 2, 3}}));  // three fixed points
    CHECK(tree_root({3, {1, 2, 3}}) == 0);
    CHECK(!is_functional_tree({3, {2, 3, 1}}));  // 3-cycle, no loop
    CHECK(!is_functional_tree({4, {1, 1, 4, 3}}));  // loop plus a 2-cycle
    CHECK(is_functional_tree({4, {2, 3, 3, 3}}));
    CHECK(tree_root({4, {2, 3, 3, 3}}) == 3);
}

TEST_CASE("cycle counting oracle on known graphs") {
    CHECK(hc_bruteforce(all_ones(3)) == 2);
    CHECK(hc_bruteforce(all_ones(2)) == 1);  // only the swap is a single cycle
    CHECK(hc_bruteforce(complete_loopless(5)) == 24);
    CHECK(hc_bruteforce(SquareMatrix::from_ints(1, {5})) == 5);
    CHECK(hc_bruteforce(identity_matrix(4)) == 0);
}

TEST_CASE("path counting oracle on known graphs") {
    CHECK(hp_bruteforce(all_ones(2)) == 2);
    CHECK(hp_bruteforce(complete_loopless(3)) == 0);  // zero diagonal kills the root loop
    CHECK(hp_bruteforce(all_ones(3)) == 6);
    CHECK_THROWS_AS(hp_bruteforce(SquareMatrix::from_ints(1, {1})), ContractViolation);
}

TEST_CASE("tree counting oracle on known graphs") {
    CHECK(tree_bruteforce(all_ones(3)) == 9);
    CHECK(tree_bruteforce(SquareMatrix::from_ints(1, {4})) == 4);
    CHECK(tree_bruteforce(all_ones(4)) == 64);
    CHECK(tree_bruteforce(identity_matrix(3)) == 0);  // no edges between vertices
}

TEST_CASE("leibniz determinant and permanent") {
    CHECK(det_leibniz(identity_matrix(4)) == 1);
    CHECK(per_leibniz(identity_matrix(4)) == 1);
    CHECK(det_leibniz(SquareMatrix::from_ints(2, {1, 2, 3, 4})) == -2);
    CHECK(per_leibniz(SquareMatrix::from_ints(2, {1, 2, 3, 4})) == 10);
    std::mt19937_64 rng(77001);
    const SquareMatrix a = random_matrix(rng, 6);
    CHECK(det_leibniz(a) == det(a));
    CHECK(per_leibniz(a) == per(a));
}

TEST_CASE("oracles refuse inputs beyond their enumeration caps") {
    CHECK_THROWS_AS(hc_bruteforce(all_ones(11)), CapExceeded);
    CHECK_THROWS_AS(hp_bruteforce(all_ones(11)), CapExceeded);
    CHECK_THROWS_AS(tree_bruteforce(all_ones(9)), CapExceeded);
    CHECK_THROWS_AS(det_leibniz(all_ones(11)), CapExceeded);
    const OracleCaps tight{4, 4};
    CHECK_THROWS_AS(hc_bruteforce(all_ones(5), tight), CapExceeded);
    CHECK_THROWS_AS(tree_bruteforce(all_ones(5), tight), CapExceeded);
    const OracleCaps loose{12, 9};
    CHECK(hc_bruteforce(all_ones(5), loose) == 24);
}

TEST_CASE("oracle weights multiply along the enumerated structure") {
    // directed 3-cycle with weights 2, 3, 5 in one direction only
    SquareMatrix a(3);
    a.at(1, 2) = 2;
    a.at(2, 3) = 3;
    a.at(3, 1) = 5;
    CHECK(hc_bruteforce(a) == 30);
    // path 1 -> 2 -> 3 with a loop of weight 7 at 3
    SquareMatrix p(3);
    p.at(1, 2) = 2;
    p.at(2, 3) = 3;
    p.at(3, 3) = 7;
    CHECK(hp_bruteforce(p) == 42);
    CHECK(tree_bruteforce(p) == 42);  // the same structure is the only rooted tree
}
