#pragma once

#include "moser/symfun.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moser {

// Sufficient-condition report for the recovery of an n-multiset from its
// s-sums: the values F_{s,k}(n) for k = 1..n and where they vanish.
struct SolvabilityReport {
    unsigned n = 0;
    unsigned s = 0;
    std::vector<BigInt> values;        // F_{s,k}(n), k = 1..n
    std::vector<unsigned> vanishing_k;
    bool solvable = false;
};

SolvabilityReport solvability(unsigned n, unsigned s);

struct UnsolvableError : std::runtime_error {
    UnsolvableError(SolvabilityReport r, const std::string& what)
        : std::runtime_error(what), report(std::move(r)) {}
    SolvabilityReport report;
};

struct IrrationalRootsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p_1(A)..p_n(A) from S = A^(s), by induction on k:
//   p_k(A) = (p_k(S) - Qtilde_{s,k,n}(p_1..p_{k-1})) / M_{s,k,n} .
PowerSumVector recover_power_sums(const NumberMultiset& S, unsigned n, unsigned s);

enum class RecoveryMode { Exact, Numeric, Auto };

struct RecoveryResult {
    RecoveryMode mode = RecoveryMode::Exact;  // resolved mode, never Auto
    NumberMultiset multiset;                  // exact mode
    std::vector<ComplexApprox> approx;        // numeric mode
    double residual = 0.0;                    // max matched s-sum deviation; 0 for exact
    PowerSumVector power_sums;                // p_1..p_n of the recovered multiset
};

// Full recovery: power sums -> elementary symmetric values (Newton-Girard) ->
// monic polynomial -> roots. Exact mode deflates rational roots and fails on
// an irrational remainder; numeric mode root-finds in double precision and
// verifies to `tol` after matching; auto tries exact first. The result is
// always verified by recomputing the s-sums.
RecoveryResult recover(const NumberMultiset& S, unsigned n, unsigned s,
                       RecoveryMode mode = RecoveryMode::Auto, double tol = 1e-6);

// Exhaustive search for distinct integer multisets with identical s-sum
// multisets, over entries in [0, range_bound] (one translate of each class,
// anchored at zero). Pairs are lexicographically ordered and truncated at
// size_cap. Guards: n <= 8, range_bound <= 12.
std::vector<std::pair<NumberMultiset, NumberMultiset>> find_ambiguous_pairs(unsigned n, unsigned s,
                                                                            unsigned range_bound,
                                                                            std::size_t size_cap);

}  // namespace moser
