#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hamcount/oracles.hpp"
#include "hamcount/symbolic.hpp"

namespace hamcount {

struct VerifyOptions {
    int max_n = 6;          // upper bound for the oracle-equivalence sweeps
    int samples = 50;       // random matrices per (check, n)
    std::uint64_t seed = 20240915;
    int threads = 1;
    long entry_lo = -9;
    long entry_hi = 9;
    OracleCaps oracle_caps{};
    SymbolicCaps sym_caps{};
};

struct VerifyResult {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_lines;

    bool ok() const { return failures == 0; }
};

/// Runs the oracle-equivalence and symbolic invariant suite up to the
/// configured caps, logging one line per check. Failures report the derived
/// per-matrix seed so the offending input can be regenerated.
VerifyResult run_verify(const VerifyOptions& opt, std::ostream& log);

/// The matrix a failing check reports: regenerates sample `t` of dimension n
/// for the given base seed and check id.
SquareMatrix verify_sample_matrix(std::uint64_t matrix_seed, int n, long lo, long hi);

/// Derived per-matrix seed, printed on failure.
std::uint64_t verify_matrix_seed(std::uint64_t base_seed, std::uint64_t check_id, int n,
                                 int sample);

}  // namespace hamcount
