#pragma once

#include <vector>

#include "hamcount/bigint.hpp"
#include "hamcount/matrix.hpp"

namespace hamcount {

/// Enumeration limits for the brute-force oracles. Above a cap the oracle
/// refuses loudly instead of running forever or approximating.
struct OracleCaps {
    int factorial_cap = 10;  // bounds the n! enumerations
    int power_cap = 8;       // bounds the n^n enumeration
};

/// A function f:[n] -> [n] given by its image array (1-indexed values).
/// Its graph has out-degree sequence (1, 1, .., 1) by construction.
struct EdgeFunction {
    int n = 0;
    std::vector<int> image;  // image[i-1] = f(i), values in [1..n]
};

/// True iff the graph of f is a rooted functional tree: its only cycle is a
/// loop, equivalently f has exactly one fixed point r and iterating f from
/// any vertex reaches r.
bool is_functional_tree(const EdgeFunction& f);

/// The root of a functional tree, or 0 if f is not one.
int tree_root(const EdgeFunction& f);

/// Sum of edge monomials over all permutations with exactly one cycle:
/// enumerates all n! permutations and keeps the single-cycle ones.
BigInt hc_bruteforce(const SquareMatrix& a, const OracleCaps& caps = {});

/// Sum over all orderings (v1, .., vn) of a_{vn,vn} * prod a_{vk,vk+1}:
/// every spanning functional path, root loop weight included. Requires n >= 2.
BigInt hp_bruteforce(const SquareMatrix& a, const OracleCaps& caps = {});

/// Sum of edge monomials over all n^n functions whose graph is a rooted
/// functional tree (the root contributes its loop weight).
BigInt tree_bruteforce(const SquareMatrix& a, const OracleCaps& caps = {});

/// Determinant and permanent by direct Leibniz expansion over all n!
/// permutations. Deliberately different machinery from det()/per().
BigInt det_leibniz(const SquareMatrix& a, const OracleCaps& caps = {});
BigInt per_leibniz(const SquareMatrix& a, const OracleCaps& caps = {});

}  // namespace hamcount
