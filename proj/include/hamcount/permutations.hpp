#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace hamcount {

/// Calls fn(perm) for every permutation of {0, .., n-1} in lexicographic
/// order. Iterative successor, constant stack depth.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(static_cast<const std::vector<int>&>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Number of cycles in the permutation given as a 0-indexed image array.
inline int cycle_count(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int v = s; !seen[v]; v = perm[v]) seen[v] = true;
    }
    return cycles;
}

/// A permutation has exactly one cycle iff iterating it from vertex 0 visits
/// all n vertices before returning.
inline bool is_single_cycle(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    if (n == 0) return false;
    int v = perm[0];
    int visited = 1;
    while (v != 0) {
        v = perm[v];
        ++visited;
        if (visited > n) return false;  // unreachable for a valid permutation
    }
    return visited == n;
}

/// sgn(perm) = (-1)^(n - #cycles).
inline int permutation_sign(const std::vector<int>& perm) {
    return ((static_cast<int>(perm.size()) - cycle_count(perm)) % 2 == 0) ? 1 : -1;
}

}  // namespace hamcount
