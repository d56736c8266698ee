#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamcount/bigint.hpp"
#include "hamcount/index_set.hpp"
#include "hamcount/matrix.hpp"

namespace hamcount {

/// Power product of edge variables a(i,j) and vertex variables x(i), kept in
/// canonical sparse form: factors sorted by (i,j) resp. i, exponents > 0.
/// Two monomials are equal iff their factor maps are identical; the default
/// lexicographic comparison over the sorted factor sequences is the canonical
/// term order used for serialization.
struct Monomial {
    std::vector<std::pair<std::pair<int, int>, int>> edges;  // ((i,j), exponent)
    std::vector<std::pair<int, int>> verts;                  // (i, exponent)

    static Monomial one() { return {}; }
    static Monomial edge(int i, int j) { return {{{{i, j}, 1}}, {}}; }
    static Monomial vertex(int i) { return {{}, {{i, 1}}}; }

    Monomial operator*(const Monomial& o) const;

    int x_degree() const;
    int exponent_of_vertex(int i) const;

    /// In-degree of vertex v in the functional graph this edge monomial
    /// describes: the total exponent of edges (., v).
    int in_degree(int v) const;

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial with exact integer coefficients over the
/// a(i,j) and x(i) variables. Canonical form: no zero coefficients stored.
/// Values are immutable from the caller's perspective; all operations
/// produce new polynomials.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(BigInt c);
    static MultiPoly term(Monomial m, BigInt coeff);
    static MultiPoly edge_var(int i, int j) { return term(Monomial::edge(i, j), 1); }
    static MultiPoly vertex_var(int i) { return term(Monomial::vertex(i), 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const BigInt& c) const;

    /// Partial derivative in the vertex variable x_i; edge variables are
    /// constants.
    MultiPoly derivative(int xi) const;

    /// Substitute a(i,j) <- edge_val(i,j) and x(i) <- vert_val(i).
    BigInt evaluate(const SquareMatrix& edge_vals, const std::vector<BigInt>& vert_vals) const;

    /// Stable text form, one term per line in canonical order:
    ///   <coeff> * a(i,j)^e ... * x(i)^e ...
    /// with the exponent suffix omitted when e = 1; the zero polynomial is
    /// the single line "0".
    std::vector<std::string> to_lines() const;
    std::string str() const;

    bool operator==(const MultiPoly&) const = default;

private:
    void add_term(const Monomial& m, const BigInt& c);

    std::map<Monomial, BigInt> terms_;
};

/// The differential operator d/dx_{s_1} .. d/dx_{s_k} for a multiset S of
/// vertex indices.
MultiPoly partial_derivative(const MultiPoly& p, const std::vector<int>& s);

/// Change of variable a(i,j) <- a(i,j) * x_j applied to every term. On an
/// edge monomial the x-exponent vector afterwards equals the in-degree
/// sequence of its graph.
MultiPoly apply_indegree_marking(const MultiPoly& p);

/// Expansion caps. Leibniz expansions cost n! terms; the identity expansion
/// multiplies det and per listings over all 2^{n-1} subsets; the derivative
/// form multiplies out O((n-1)! * 2^{n-1})-term intermediates.
struct SymbolicCaps {
    int leibniz = 6;
    int identity = 5;
    int derivative = 5;
};

/// Square matrix of polynomial entries, 1-indexed like SquareMatrix.
struct SymMatrix {
    int n = 0;
    std::vector<MultiPoly> e;

    explicit SymMatrix(int n_ = 0) : n(n_), e(static_cast<std::size_t>(n_) * n_) {}

    MultiPoly& at(int i, int j) { return e[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    const MultiPoly& at(int i, int j) const {
        return e[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }

    /// The generic matrix whose (i,j) entry is the variable a(i,j).
    static SymMatrix generic(int n);
};

SymMatrix sym_principal_submatrix(const SymMatrix& a, const IndexSet& s);
SymMatrix sym_negated(const SymMatrix& a);

/// Full Leibniz expansions; coefficients are +-1 (det) or +1 (per) when the
/// entries are distinct variables.
MultiPoly sym_det(const SymMatrix& a, const SymbolicCaps& caps = {});
MultiPoly sym_per(const SymMatrix& a, const SymbolicCaps& caps = {});

/// One monomial per single-cycle permutation, coefficient 1; (n-1)! terms.
MultiPoly sym_hc_listing(int n, const SymbolicCaps& caps = {});

/// Expands sum over S subseteq [n-1] of sym_det(-A_S) * sym_per(A_{[n] \ S})
/// on the generic matrix. After cancellation this equals sym_hc_listing(n).
MultiPoly sym_hc_identity_expand(int n, const SymbolicCaps& caps = {});

/// Coefficient of the edge monomial of `sigma` (1-indexed image array) in
/// sym_hc_identity_expand(n): 1 when sigma has exactly one cycle, else 0.
BigInt sym_coeff_profile(int n, const std::vector<int>& sigma,
                         const SymbolicCaps& caps = {});

/// Symbolic directed matrix tree theorem: sum over i of a(i,i) *
/// sym_det(L_{[n] \ {i}}) with L = diag(A*1) - A. One monomial per rooted
/// functional tree, coefficient 1.
MultiPoly sym_tdmtt(int n, const SymbolicCaps& caps = {});

/// The derivative construction of the Hamiltonian cycle listing:
///   d_[n]  sum_j a(n,j) x_j * det(diag(Ax) - A diag(x))_{[n-1]}.
/// Equals sym_hc_listing(n); the result is free of x variables.
MultiPoly sym_hc_derivative_form(int n, const SymbolicCaps& caps = {});

/// Checks det(A + diag(x)) == sum over S subseteq [n] of det(A_S) *
/// prod_{i not in S} x_i as an identity of polynomials.
bool sym_det_sum_lemma_check(int n, const SymbolicCaps& caps = {});

}  // namespace hamcount
