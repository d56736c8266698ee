#include "hamcount/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "hamcount/permutations.hpp"

namespace hamcount {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds symbolic cap " + std::to_string(cap));
}

void check_dim(int n, const char* what) {
    if (n < 1) throw ContractViolation(std::string(what) + " requires n >= 1");
}

// Factor expansions inside a composite expansion are bounded by the
// composite's own cap, not the tighter Leibniz default.
SymbolicCaps inner_caps(const SymbolicCaps& caps, int n) {
    SymbolicCaps c = caps;
    c.leibniz = std::max(c.leibniz, n);
    return c;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.edges.reserve(edges.size() + o.edges.size());
    std::size_t i = 0, j = 0;
    while (i < edges.size() || j < o.edges.size()) {
        if (j == o.edges.size() || (i < edges.size() && edges[i].first < o.edges[j].first))
            r.edges.push_back(edges[i++]);
        else if (i == edges.size() || o.edges[j].first < edges[i].first)
            r.edges.push_back(o.edges[j++]);
        else {
            r.edges.push_back({edges[i].first, edges[i].second + o.edges[j].second});
            ++i, ++j;
        }
    }
    r.verts.reserve(verts.size() + o.verts.size());
    i = j = 0;
    while (i < verts.size() || j < o.verts.size()) {
        if (j == o.verts.size() || (i < verts.size() && verts[i].first < o.verts[j].first))
            r.verts.push_back(verts[i++]);
        else if (i == verts.size() || o.verts[j].first < verts[i].first)
            r.verts.push_back(o.verts[j++]);
        else {
            r.verts.push_back({verts[i].first, verts[i].second + o.verts[j].second});
            ++i, ++j;
        }
    }
    return r;
}

int Monomial::x_degree() const {
    int d = 0;
    for (const auto& [v, e] : verts) d += e;
    return d;
}

int Monomial::exponent_of_vertex(int i) const {
    for (const auto& [v, e] : verts)
        if (v == i) return e;
    return 0;
}

int Monomial::in_degree(int v) const {
    int d = 0;
    for (const auto& [edge, e] : edges)
        if (edge.second == v) d += e;
    return d;
}

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

MultiPoly MultiPoly::term(Monomial m, BigInt coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

BigInt MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const BigInt& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::derivative(int xi) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = std::lower_bound(m.verts.begin(), m.verts.end(), std::pair{xi, 0},
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == m.verts.end() || it->first != xi) continue;
        Monomial d = m;
        const int e = it->second;
        auto& entry = d.verts[static_cast<std::size_t>(it - m.verts.begin())];
        if (e == 1)
            d.verts.erase(d.verts.begin() + (it - m.verts.begin()));
        else
            entry.second = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

BigInt MultiPoly::evaluate(const SquareMatrix& edge_vals,
                           const std::vector<BigInt>& vert_vals) const {
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt prod = c;
        for (const auto& [edge, e] : m.edges) {
            const auto& [i, j] = edge;
            prod *= boost::multiprecision::pow(edge_vals.at(i, j), static_cast<unsigned>(e));
        }
        for (const auto& [v, e] : m.verts) {
            if (v < 1 || static_cast<std::size_t>(v) > vert_vals.size())
                throw ContractViolation("evaluate: no value for x(" + std::to_string(v) + ")");
            prod *= boost::multiprecision::pow(vert_vals[static_cast<std::size_t>(v - 1)],
                                               static_cast<unsigned>(e));
        }
        total += prod;
    }
    return total;
}

std::vector<std::string> MultiPoly::to_lines() const {
    if (terms_.empty()) return {"0"};
    std::vector<std::string> lines;
    lines.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::string s = c.str();
        for (const auto& [edge, e] : m.edges) {
            s += " * a(" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
        for (const auto& [v, e] : m.verts) {
            s += " * x(" + std::to_string(v) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
        lines.push_back(std::move(s));
    }
    return lines;
}

std::string MultiPoly::str() const {
    std::string out;
    const auto lines = to_lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += "\n";
        out += lines[i];
    }
    return out;
}

MultiPoly partial_derivative(const MultiPoly& p, const std::vector<int>& s) {
    MultiPoly r = p;
    for (int xi : s) r = r.derivative(xi);
    return r;
}

MultiPoly apply_indegree_marking(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        std::map<int, int> indeg;
        for (const auto& [edge, e] : m.edges) indeg[edge.second] += e;
        Monomial xs;
        xs.verts.assign(indeg.begin(), indeg.end());
        r += MultiPoly::term(m * xs, c);
    }
    return r;
}

SymMatrix SymMatrix::generic(int n) {
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = MultiPoly::edge_var(i, j);
    return m;
}

SymMatrix sym_principal_submatrix(const SymMatrix& a, const IndexSet& s) {
    const std::vector<int> idx = s.elements();
    for (int v : idx)
        if (v > a.n) throw ContractViolation("sym_principal_submatrix: index out of range");
    SymMatrix b(static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            b.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = a.at(idx[r], idx[c]);
    return b;
}

SymMatrix sym_negated(const SymMatrix& a) {
    SymMatrix b(a.n);
    for (std::size_t k = 0; k < a.e.size(); ++k) b.e[k] = -a.e[k];
    return b;
}

namespace {

MultiPoly leibniz_expand(const SymMatrix& a, bool signed_sum) {
    MultiPoly total;
    for_each_permutation(a.n, [&](const std::vector<int>& perm) {
        MultiPoly prod = MultiPoly::constant(1);
        for (int i = 0; i < a.n && !prod.is_zero(); ++i)
            prod *= a.at(i + 1, perm[static_cast<std::size_t>(i)] + 1);
        if (signed_sum && permutation_sign(perm) < 0)
            total -= prod;
        else
            total += prod;
    });
    return total;
}

// diag(Ax) - A diag(x): the x-weighted matrix whose minors list functional
// trees with in-degrees recorded in the x exponents. Entry (i,i) is
// sum_{k != i} a(i,k) x_k, entry (i,j) is -a(i,j) x_j.
SymMatrix sym_xweighted_tree_matrix(int n) {
    SymMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly diag;
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            diag += MultiPoly::edge_var(i, k) * MultiPoly::vertex_var(k);
        }
        m.at(i, i) = std::move(diag);
        for (int j = 1; j <= n; ++j)
            if (j != i) m.at(i, j) = -(MultiPoly::edge_var(i, j) * MultiPoly::vertex_var(j));
    }
    return m;
}

}  // namespace

MultiPoly sym_det(const SymMatrix& a, const SymbolicCaps& caps) {
    check_cap(a.n, caps.leibniz, "sym_det");
    return leibniz_expand(a, true);
}

MultiPoly sym_per(const SymMatrix& a, const SymbolicCaps& caps) {
    check_cap(a.n, caps.leibniz, "sym_per");
    return leibniz_expand(a, false);
}

MultiPoly sym_hc_listing(int n, const SymbolicCaps& caps) {
    check_dim(n, "sym_hc_listing");
    check_cap(n, caps.leibniz, "sym_hc_listing");
    MultiPoly total;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        if (!is_single_cycle(perm)) return;
        Monomial m;
        for (int i = 0; i < n; ++i)
            m = m * Monomial::edge(i + 1, perm[static_cast<std::size_t>(i)] + 1);
        total += MultiPoly::term(std::move(m), 1);
    });
    return total;
}

MultiPoly sym_hc_identity_expand(int n, const SymbolicCaps& caps) {
    check_dim(n, "sym_hc_identity_expand");
    check_cap(n, caps.identity, "sym_hc_identity_expand");
    const SymbolicCaps inner = inner_caps(caps, n);
    const SymMatrix a = SymMatrix::generic(n);
    const std::uint64_t full = IndexSet::full(n).bits();
    MultiPoly total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        const MultiPoly d = sym_det(sym_negated(sym_principal_submatrix(a, IndexSet(mask, n))), inner);
        const MultiPoly p = sym_per(sym_principal_submatrix(a, IndexSet(full & ~mask, n)), inner);
        total += d * p;
    }
    return total;
}

BigInt sym_coeff_profile(int n, const std::vector<int>& sigma, const SymbolicCaps& caps) {
    check_dim(n, "sym_coeff_profile");
    if (static_cast<int>(sigma.size()) != n)
        throw ContractViolation("sym_coeff_profile: sigma must have length n");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ContractViolation("sym_coeff_profile: sigma is not a permutation of [1..n]");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Monomial m;
    for (int i = 1; i <= n; ++i) m = m * Monomial::edge(i, sigma[static_cast<std::size_t>(i - 1)]);
    return sym_hc_identity_expand(n, caps).coeff(m);
}

MultiPoly sym_tdmtt(int n, const SymbolicCaps& caps) {
    check_dim(n, "sym_tdmtt");
    check_cap(n, caps.leibniz, "sym_tdmtt");
    const SymbolicCaps inner = inner_caps(caps, n);
    SymMatrix l(n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly diag;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            diag += MultiPoly::edge_var(i, j);
            l.at(i, j) = -MultiPoly::edge_var(i, j);
        }
        l.at(i, i) = std::move(diag);
    }
    const IndexSet full = IndexSet::full(n);
    MultiPoly total;
    for (int i = 1; i <= n; ++i)
        total += MultiPoly::edge_var(i, i) *
                 sym_det(sym_principal_submatrix(l, full.without(i)), inner);
    return total;
}

MultiPoly sym_hc_derivative_form(int n, const SymbolicCaps& caps) {
    check_dim(n, "sym_hc_derivative_form");
    check_cap(n, caps.derivative, "sym_hc_derivative_form");
    const SymbolicCaps inner = inner_caps(caps, n);

    const SymMatrix m = sym_xweighted_tree_matrix(n);
    const MultiPoly minor =
        sym_det(sym_principal_submatrix(m, IndexSet::full(n).without(n)), inner);

    MultiPoly closing_edges;  // sum_j a(n,j) x_j re-closes the cycle at vertex n
    for (int j = 1; j <= n; ++j)
        closing_edges += MultiPoly::edge_var(n, j) * MultiPoly::vertex_var(j);

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return partial_derivative(closing_edges * minor, all);
}

bool sym_det_sum_lemma_check(int n, const SymbolicCaps& caps) {
    check_dim(n, "sym_det_sum_lemma_check");
    check_cap(n, caps.identity, "sym_det_sum_lemma_check");
    const SymbolicCaps inner = inner_caps(caps, n);

    const SymMatrix a = SymMatrix::generic(n);
    SymMatrix perturbed = a;
    for (int i = 1; i <= n; ++i)
        perturbed.at(i, i) = a.at(i, i) + MultiPoly::vertex_var(i);
    const MultiPoly lhs = sym_det(perturbed, inner);

    MultiPoly rhs;
    const std::uint64_t full = IndexSet::full(n).bits();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        const IndexSet s(mask, n);
        Monomial rest;
        for (int v = 1; v <= n; ++v)
            if (!s.contains(v)) rest = rest * Monomial::vertex(v);
        rhs += sym_det(sym_principal_submatrix(a, s), inner) * MultiPoly::term(rest, 1);
    }
    return lhs == rhs;
}

}  // namespace hamcount
