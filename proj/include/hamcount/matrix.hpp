#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hamcount/bigint.hpp"
#include "hamcount/errors.hpp"
#include "hamcount/index_set.hpp"

namespace hamcount {

/// Dense exact-integer square matrix. The public accessors are 1-indexed so
/// that at(i, j) reads as a_{i,j}; storage is row-major and 0-indexed.
/// The 0x0 matrix is a valid value (it appears as the empty principal
/// submatrix, with det = per = 1).
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(int n) : n_(n) {
        if (n < 0) throw ContractViolation("matrix dimension must be nonnegative");
        e_.assign(static_cast<std::size_t>(n) * n, BigInt(0));
    }

    /// Row-major construction from machine integers, mainly for tests and
    /// small fixtures.
    static SquareMatrix from_ints(int n, std::initializer_list<long long> vals) {
        SquareMatrix m(n);
        if (vals.size() != m.e_.size())
            throw DimensionMismatch("from_ints: expected " + std::to_string(m.e_.size()) +
                                    " entries, got " + std::to_string(vals.size()));
        std::size_t k = 0;
        for (long long v : vals) m.e_[k++] = v;
        return m;
    }

    int size() const { return n_; }

    BigInt& at(int i, int j) {
        check(i, j);
        return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    const BigInt& at(int i, int j) const {
        check(i, j);
        return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    void check(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw ContractViolation("matrix index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range for n = " +
                                    std::to_string(n_));
    }

    int n_ = 0;
    std::vector<BigInt> e_;
};

SquareMatrix all_ones(int n);
SquareMatrix identity_matrix(int n);

/// Adjacency matrix of the complete loopless digraph: ones off the diagonal,
/// zeros on it.
SquareMatrix complete_loopless(int n);

SquareMatrix diagonal_matrix(const std::vector<BigInt>& d);
SquareMatrix transpose(const SquareMatrix& a);
SquareMatrix negated(const SquareMatrix& a);

/// Conjugation by the permutation matrix of `perm` (1-indexed image):
/// result.at(perm[i-1], perm[j-1]) == a.at(i, j).
SquareMatrix relabel(const SquareMatrix& a, const std::vector<int>& perm);

/// Copy of `a` with every diagonal entry replaced by `d`.
SquareMatrix with_uniform_diagonal(SquareMatrix a, const BigInt& d);

/// Uniform random entries in [lo, hi], drawn row-major from `rng`.
SquareMatrix random_matrix(std::mt19937_64& rng, int n, long lo = -9, long hi = 9);

}  // namespace hamcount
