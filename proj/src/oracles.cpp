#include "hamcount/oracles.hpp"

#include <string>

#include "hamcount/permutations.hpp"

namespace hamcount {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace

bool is_functional_tree(const EdgeFunction& f) { return tree_root(f) != 0; }

int tree_root(const EdgeFunction& f) {
    const int n = f.n;
    int root = 0;
    for (int v = 1; v <= n; ++v) {
        if (f.image[static_cast<std::size_t>(v - 1)] == v) {
            if (root != 0) return 0;  // two loops, two cycles
            root = v;
        }
    }
    if (root == 0) return 0;
    // Every vertex must reach the root within n-1 steps; a vertex trapped in
    // a non-loop cycle never does.
    for (int v = 1; v <= n; ++v) {
        int u = v;
        int steps = 0;
        while (u != root && steps < n) {
            u = f.image[static_cast<std::size_t>(u - 1)];
            ++steps;
        }
        if (u != root) return 0;
    }
    return root;
}

BigInt hc_bruteforce(const SquareMatrix& a, const OracleCaps& caps) {
    const int n = a.size();
    if (n < 1) throw ContractViolation("hc_bruteforce requires n >= 1");
    check_cap(n, caps.factorial_cap, "hc_bruteforce");
    BigInt total = 0;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        if (!is_single_cycle(perm)) return;
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i)
            prod *= a.at(i + 1, perm[static_cast<std::size_t>(i)] + 1);
        total += prod;
    });
    return total;
}

BigInt hp_bruteforce(const SquareMatrix& a, const OracleCaps& caps) {
    const int n = a.size();
    if (n < 2) throw ContractViolation("hp_bruteforce requires n >= 2");
    check_cap(n, caps.factorial_cap, "hp_bruteforce");
    BigInt total = 0;
    for_each_permutation(n, [&](const std::vector<int>& order) {
        // order is the vertex sequence v1, .., vn (0-indexed); the path walks
        // the consecutive edges and the final vertex carries its loop weight.
        BigInt prod = a.at(order[static_cast<std::size_t>(n - 1)] + 1,
                           order[static_cast<std::size_t>(n - 1)] + 1);
        for (int k = 0; k + 1 < n && prod != 0; ++k)
            prod *= a.at(order[static_cast<std::size_t>(k)] + 1,
                         order[static_cast<std::size_t>(k + 1)] + 1);
        total += prod;
    });
    return total;
}

BigInt tree_bruteforce(const SquareMatrix& a, const OracleCaps& caps) {
    const int n = a.size();
    if (n < 1) throw ContractViolation("tree_bruteforce requires n >= 1");
    check_cap(n, caps.power_cap, "tree_bruteforce");
    EdgeFunction f{n, std::vector<int>(static_cast<std::size_t>(n), 1)};
    BigInt total = 0;
    // Odometer over all n^n image arrays.
    while (true) {
        if (is_functional_tree(f)) {
            BigInt prod = 1;
            for (int i = 1; i <= n && prod != 0; ++i)
                prod *= a.at(i, f.image[static_cast<std::size_t>(i - 1)]);
            total += prod;
        }
        int pos = 0;
        while (pos < n && f.image[static_cast<std::size_t>(pos)] == n) {
            f.image[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++f.image[static_cast<std::size_t>(pos)];
    }
    return total;
}

BigInt det_leibniz(const SquareMatrix& a, const OracleCaps& caps) {
    const int n = a.size();
    check_cap(n, caps.factorial_cap, "det_leibniz");
    BigInt total = 0;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i)
            prod *= a.at(i + 1, perm[static_cast<std::size_t>(i)] + 1);
        if (permutation_sign(perm) < 0)
            total -= prod;
        else
            total += prod;
    });
    return total;
}

BigInt per_leibniz(const SquareMatrix& a, const OracleCaps& caps) {
    const int n = a.size();
    check_cap(n, caps.factorial_cap, "per_leibniz");
    BigInt total = 0;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        BigInt prod = 1;
        for (int i = 0; i < n && prod != 0; ++i)
            prod *= a.at(i + 1, perm[static_cast<std::size_t>(i)] + 1);
        total += prod;
    });
    return total;
}

}  // namespace hamcount
