#include "hamcount/matrix.hpp"

namespace hamcount {

SquareMatrix all_ones(int n) {
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = 1;
    return m;
}

SquareMatrix identity_matrix(int n) {
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

SquareMatrix complete_loopless(int n) {
    SquareMatrix m = all_ones(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 0;
    return m;
}

SquareMatrix diagonal_matrix(const std::vector<BigInt>& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 1; i <= m.size(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i - 1)];
    return m;
}

SquareMatrix transpose(const SquareMatrix& a) {
    SquareMatrix m(a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) m.at(j, i) = a.at(i, j);
    return m;
}

SquareMatrix negated(const SquareMatrix& a) {
    SquareMatrix m(a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) m.at(i, j) = -a.at(i, j);
    return m;
}

SquareMatrix relabel(const SquareMatrix& a, const std::vector<int>& perm) {
    const int n = a.size();
    if (static_cast<int>(perm.size()) != n)
        throw DimensionMismatch("relabel: permutation length does not match matrix size");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ContractViolation("relabel: image array is not a permutation of [1..n]");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]) =
                a.at(i, j);
    return m;
}

SquareMatrix with_uniform_diagonal(SquareMatrix a, const BigInt& d) {
    for (int i = 1; i <= a.size(); ++i) a.at(i, i) = d;
    return a;
}

SquareMatrix random_matrix(std::mt19937_64& rng, int n, long lo, long hi) {
    if (lo > hi) throw ContractViolation("random_matrix: empty entry range");
    std::uniform_int_distribution<long> dist(lo, hi);
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace hamcount
