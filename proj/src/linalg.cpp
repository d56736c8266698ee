#include "hamcount/linalg.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace hamcount {

namespace {

void check_indices_fit(const SquareMatrix& a, const IndexSet& s, const char* what) {
    for (int v : s.elements())
        if (v > a.size())
            throw ContractViolation(std::string(what) + ": index " + std::to_string(v) +
                                    " out of range for n = " + std::to_string(a.size()));
}

// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
// intermediates stay integral. Row swaps flip the sign.
BigInt det_bareiss(std::vector<BigInt> m, int n) {
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k) * n + k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[static_cast<std::size_t>(r) * n + k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(k) * n + j],
                          m[static_cast<std::size_t>(pivot) * n + j]);
            sign = -sign;
        }
        const BigInt& pk = m[static_cast<std::size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt& mij = m[static_cast<std::size_t>(i) * n + j];
                mij = (mij * pk - m[static_cast<std::size_t>(i) * n + k] *
                                      m[static_cast<std::size_t>(k) * n + j]) /
                      prev;
            }
            m[static_cast<std::size_t>(i) * n + k] = 0;
        }
        prev = pk;
    }
    BigInt d = m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
    return sign < 0 ? BigInt(-d) : d;
}

}  // namespace

SquareMatrix principal_submatrix(const SquareMatrix& a, const IndexSet& s) {
    return submatrix(a, s, s);
}

SquareMatrix submatrix(const SquareMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw DimensionMismatch("submatrix: |rows| = " + std::to_string(rows.size()) +
                                " but |cols| = " + std::to_string(cols.size()));
    check_indices_fit(a, rows, "submatrix rows");
    check_indices_fit(a, cols, "submatrix cols");
    const std::vector<int> ri = rows.elements();
    const std::vector<int> ci = cols.elements();
    SquareMatrix b(static_cast<int>(ri.size()));
    for (std::size_t r = 0; r < ri.size(); ++r)
        for (std::size_t c = 0; c < ci.size(); ++c)
            b.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = a.at(ri[r], ci[c]);
    return b;
}

BigInt det(const SquareMatrix& a) {
    const int n = a.size();
    switch (n) {
        case 0:
            return 1;
        case 1:
            return a.at(1, 1);
        case 2:
            return a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
        case 3:
            return a.at(1, 1) * (a.at(2, 2) * a.at(3, 3) - a.at(2, 3) * a.at(3, 2)) -
                   a.at(1, 2) * (a.at(2, 1) * a.at(3, 3) - a.at(2, 3) * a.at(3, 1)) +
                   a.at(1, 3) * (a.at(2, 1) * a.at(3, 2) - a.at(2, 2) * a.at(3, 1));
        default: {
            std::vector<BigInt> m;
            m.reserve(static_cast<std::size_t>(n) * n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) m.push_back(a.at(i, j));
            return det_bareiss(std::move(m), n);
        }
    }
}

BigInt per(const SquareMatrix& a) {
    const int n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a.at(1, 1);

    std::vector<BigInt> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) entries.push_back(a.at(i, j));

    // Ryser: per(A) = sum over nonempty column sets K of (-1)^{n-|K|} *
    // prod_i sum_{j in K} a_{ij}. Subsets advance in Gray-code order, so
    // each step toggles one column in the row sums.
    std::vector<BigInt> rowsum(static_cast<std::size_t>(n), BigInt(0));
    BigInt total = 0;
    BigInt prod;
    std::uint64_t gray = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k != end; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t diff = gray ^ next;
        const int j = std::countr_zero(diff);
        const bool added = (next & diff) != 0;
        for (int i = 0; i < n; ++i) {
            const BigInt& aij = entries[static_cast<std::size_t>(i) * n + j];
            if (added)
                rowsum[static_cast<std::size_t>(i)] += aij;
            else
                rowsum[static_cast<std::size_t>(i)] -= aij;
        }
        prod = rowsum[0];
        for (int i = 1; i < n && prod != 0; ++i) prod *= rowsum[static_cast<std::size_t>(i)];
        if (((n - std::popcount(next)) & 1) != 0)
            total -= prod;
        else
            total += prod;
        gray = next;
    }
    return total;
}

}  // namespace hamcount
