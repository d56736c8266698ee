#include "hamcount/identities.hpp"

#include <bit>
#include <string>
#include <thread>
#include <utility>

#include "hamcount/linalg.hpp"

namespace hamcount {

namespace {

using Clock = std::chrono::steady_clock;

void check_threads(int threads) {
    if (threads < 1) throw ContractViolation("threads must be >= 1");
}

// Splits [0, total) into `workers` contiguous chunks and reduces the chunk
// results in index order. Exact integer addition is associative and
// commutative, so the partitioning never changes the sum.
template <typename ChunkFn>
std::pair<BigInt, std::uint64_t> partitioned_sum(std::uint64_t total, int threads,
                                                 ChunkFn&& chunk) {
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total == 0 ? 1 : total);
    if (workers <= 1) return chunk(0, total);

    std::vector<std::pair<BigInt, std::uint64_t>> results(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = total / workers * w + std::min(w, total % workers);
        const std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
        pool.emplace_back([&results, w, lo, len, &chunk] { results[w] = chunk(lo, lo + len); });
    }
    for (auto& t : pool) t.join();

    BigInt sum = 0;
    std::uint64_t count = 0;
    for (auto& [s, c] : results) {
        sum += s;
        count += c;
    }
    return {std::move(sum), count};
}

}  // namespace

std::string_view method_name(CountMethod m) {
    switch (m) {
        case CountMethod::hc_identity: return "hc_identity";
        case CountMethod::hc_bruteforce: return "hc_bruteforce";
        case CountMethod::hp_identity: return "hp_identity";
        case CountMethod::hp_bruteforce: return "hp_bruteforce";
        case CountMethod::tree_tdmtt: return "tree_tdmtt";
        case CountMethod::tree_bruteforce: return "tree_bruteforce";
    }
    return "unknown";
}

CountReport hc_count_identity(const SquareMatrix& a, int threads) {
    const int n = a.size();
    if (n < 1) throw ContractViolation("hc_count_identity requires n >= 1");
    check_threads(threads);
    const auto t0 = Clock::now();

    // Vertex n is the distinguished vertex: S ranges over subsets of [n-1],
    // so the complement always contains n.
    const std::uint64_t full = IndexSet::full(n).bits();
    const std::uint64_t total = std::uint64_t{1} << (n - 1);

    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) -> std::pair<BigInt, std::uint64_t> {
        BigInt sum = 0;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const IndexSet s(mask, n);
            const BigInt d = det(principal_submatrix(a, s));
            if (d == 0) continue;  // the term is zero; skip the permanent
            const IndexSet rest(full & ~mask, n);
            const BigInt p = per(principal_submatrix(a, rest));
            if ((std::popcount(mask) & 1) != 0)
                sum -= d * p;  // det(-A_S) = (-1)^{|S|} det(A_S)
            else
                sum += d * p;
        }
        return {std::move(sum), hi - lo};
    };

    auto [count, terms] = partitioned_sum(total, threads, chunk);
    return {n, std::move(count), CountMethod::hc_identity, Clock::now() - t0, terms};
}

CountReport hp_count_identity(const SquareMatrix& a, int threads) {
    const int n = a.size();
    if (n < 2)
        throw ContractViolation("hp_count_identity requires n >= 2 (no convention for paths below that)");
    check_threads(threads);
    const auto t0 = Clock::now();

    const std::uint64_t full = IndexSet::full(n).bits();
    const std::uint64_t total = std::uint64_t{1} << n;

    // One chunk handles a range of the sets T; within each T the ordered
    // pairs i != j contribute a_{jj} det(-A)_{[n] \ T} per(A)_{T\{j}, T\{i}}.
    // Diagonal pairs i = j are omitted: their contribution is identically
    // zero (hp_diagonal_pair_sum evaluates it).
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) -> std::pair<BigInt, std::uint64_t> {
        BigInt sum = 0;
        std::uint64_t triples = 0;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) < 2) continue;
            const IndexSet t(mask, n);
            const std::vector<int> members = t.elements();
            triples +=
                static_cast<std::uint64_t>(members.size()) * (members.size() - 1);
            BigInt d = det(principal_submatrix(a, IndexSet(full & ~mask, n)));
            if (d == 0) continue;
            if (((n - t.size()) & 1) != 0) d = -d;  // det(-A)_{[n] \ T}
            for (int j : members) {
                const BigInt& loop = a.at(j, j);
                if (loop == 0) continue;
                const IndexSet rows = t.without(j);
                for (int i : members) {
                    if (i == j) continue;
                    const BigInt p = per(submatrix(a, rows, t.without(i)));
                    if (p != 0) sum += loop * d * p;
                }
            }
        }
        return {std::move(sum), triples};
    };

    auto [count, terms] = partitioned_sum(total, threads, chunk);
    return {n, std::move(count), CountMethod::hp_identity, Clock::now() - t0, terms};
}

SquareMatrix row_sum_laplacian(const SquareMatrix& a) {
    const int n = a.size();
    SquareMatrix l(n);
    for (int i = 1; i <= n; ++i) {
        BigInt rowsum = 0;
        for (int j = 1; j <= n; ++j) {
            rowsum += a.at(i, j);
            if (i != j) l.at(i, j) = -a.at(i, j);
        }
        l.at(i, i) = rowsum - a.at(i, i);
    }
    return l;
}

CountReport tree_count_tdmtt(const SquareMatrix& a) {
    const int n = a.size();
    if (n < 1) throw ContractViolation("tree_count_tdmtt requires n >= 1");
    const auto t0 = Clock::now();
    const SquareMatrix l = row_sum_laplacian(a);
    const IndexSet full = IndexSet::full(n);
    BigInt count = 0;
    for (int i = 1; i <= n; ++i) {
        if (a.at(i, i) == 0) continue;
        count += a.at(i, i) * det(principal_submatrix(l, full.without(i)));
    }
    return {n, std::move(count), CountMethod::tree_tdmtt, Clock::now() - t0,
            static_cast<std::uint64_t>(n)};
}

BigInt tree_count_rooted(const SquareMatrix& a, int root) {
    const int n = a.size();
    if (root < 1 || root > n)
        throw ContractViolation("tree_count_rooted: root " + std::to_string(root) +
                                " out of range for n = " + std::to_string(n));
    if (a.at(root, root) == 0) return 0;
    const SquareMatrix l = row_sum_laplacian(a);
    return a.at(root, root) * det(principal_submatrix(l, IndexSet::full(n).without(root)));
}

BigInt det_sum_expand(const SquareMatrix& a, const std::vector<BigInt>& x,
                      const IndexSet& universe) {
    if (x.size() != static_cast<std::size_t>(universe.size()))
        throw DimensionMismatch("det_sum_expand: x must hold one entry per element of universe");
    const std::vector<int> members = universe.elements();
    for (int v : members)
        if (v > a.size())
            throw ContractViolation("det_sum_expand: universe exceeds matrix dimension");

    const std::uint64_t mask = universe.bits();
    BigInt total = 0;
    std::uint64_t sub = mask;
    while (true) {
        const IndexSet s(sub, universe.universe());
        BigInt term = det(principal_submatrix(a, s));
        if (term != 0) {
            for (std::size_t k = 0; k < members.size() && term != 0; ++k)
                if (!s.contains(members[k])) term *= x[k];
            total += term;
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
    return total;
}

BigInt hc_full_range_sum(const SquareMatrix& a) {
    const int n = a.size();
    if (n < 1) throw ContractViolation("hc_full_range_sum requires n >= 1");
    const std::uint64_t full = IndexSet::full(n).bits();
    BigInt sum = 0;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        const BigInt d = det(principal_submatrix(a, IndexSet(mask, n)));
        if (d == 0) continue;
        const BigInt p = per(principal_submatrix(a, IndexSet(full & ~mask, n)));
        if ((std::popcount(mask) & 1) != 0)
            sum -= d * p;
        else
            sum += d * p;
    }
    return sum;
}

BigInt hp_diagonal_pair_sum(const SquareMatrix& a) {
    const int n = a.size();
    if (n < 2) throw ContractViolation("hp_diagonal_pair_sum requires n >= 2");
    const std::uint64_t full = IndexSet::full(n).bits();
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) {
        if (a.at(i, i) == 0) continue;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            const IndexSet t(mask, n);
            if (!t.contains(i)) continue;
            BigInt d = det(principal_submatrix(a, IndexSet(full & ~mask, n)));
            if (d == 0) continue;
            if (((n - t.size()) & 1) != 0) d = -d;
            const BigInt p = per(principal_submatrix(a, t.without(i)));
            if (p != 0) sum += a.at(i, i) * d * p;
        }
    }
    return sum;
}

}  // namespace hamcount
