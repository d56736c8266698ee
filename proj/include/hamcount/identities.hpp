#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hamcount/bigint.hpp"
#include "hamcount/index_set.hpp"
#include "hamcount/matrix.hpp"

namespace hamcount {

enum class CountMethod {
    hc_identity,
    hc_bruteforce,
    hp_identity,
    hp_bruteforce,
    tree_tdmtt,
    tree_bruteforce,
};

std::string_view method_name(CountMethod m);

struct CountReport {
    int n = 0;
    BigInt count;
    CountMethod method = CountMethod::hc_identity;
    std::chrono::duration<double, std::milli> elapsed{0};
    std::uint64_t terms_evaluated = 0;
};

/// Number of directed Hamiltonian cycles (weighted):
///   sum over S subseteq [n-1] of det(-A_S) * per(A_{[n] \ S}).
/// Vertex n is the distinguished vertex excluded from S. 2^{n-1} subset
/// terms; they may be evaluated in parallel (`threads` >= 1), with a
/// result identical to the single-threaded sum.
CountReport hc_count_identity(const SquareMatrix& a, int threads = 1);

/// Weighted count of spanning functional paths (root loop factor a_{jj}
/// included):
///   sum over ordered pairs i != j and sets T with {i,j} subseteq T subseteq [n]
///   of a_{jj} * det(-A)_{[n] \ T} * per(A)_{T \ {j}, T \ {i}}.
/// Requires n >= 2. The i = j diagonal pairs are provably zero and skipped;
/// hp_diagonal_pair_sum() evaluates them for verification.
CountReport hp_count_identity(const SquareMatrix& a, int threads = 1);

/// Weighted count of rooted functional trees by the directed matrix tree
/// theorem: sum over i of a_{ii} * det(L_{[n] \ {i}}) with L = diag(A*1) - A.
CountReport tree_count_tdmtt(const SquareMatrix& a);

/// Single summand of the directed matrix tree theorem:
/// a_{root,root} * det(L_{[n] \ {root}}).
BigInt tree_count_rooted(const SquareMatrix& a, int root);

/// Right-hand side of the determinant sum lemma evaluated over subsets of
/// `universe`: sum over S subseteq universe of det(A_S) * prod_{i in
/// universe \ S} x_i, where x holds one entry per element of universe in
/// increasing order. Equals det(A_universe + diag(x)).
BigInt det_sum_expand(const SquareMatrix& a, const std::vector<BigInt>& x,
                      const IndexSet& universe);

/// sum over ALL S subseteq [n] of det(-A_S) * per(A_{[n] \ S}). Zero for
/// every matrix with n >= 1: the unrestricted subset sum cancels completely.
BigInt hc_full_range_sum(const SquareMatrix& a);

/// The i = j terms omitted by hp_count_identity:
/// sum over i and T containing i of a_{ii} * det(-A)_{[n] \ T} * per(A_{T \ {i}}).
/// Zero for every matrix with n >= 2.
BigInt hp_diagonal_pair_sum(const SquareMatrix& a);

/// L = diag(A*1) - A. The row sums include the diagonal, which therefore
/// cancels: L_{kk} = sum_{j != k} a_{kj} and L_{kj} = -a_{kj}.
SquareMatrix row_sum_laplacian(const SquareMatrix& a);

}  // namespace hamcount
