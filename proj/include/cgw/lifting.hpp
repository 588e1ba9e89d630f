// The lifting problem: given a 0/1 support matrix S and a root order k,
// find an assignment of k-th roots to the ones of S that makes a CGW, or
// prove by exhaustive search that none exists. Search order and dephasing
// normalization are deterministic; NoLift is only ever reported on
// exhaustive completion.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cgw/matrix.hpp"

namespace cgw {

struct LiftInstance {
    GwMatrix support;  // over U_1; '.' = zero, '0' = one
    int k = 2;
};

enum class LiftStatus { Lifted, NoLift, BudgetExceeded };

struct LiftResult {
    LiftStatus status = LiftStatus::NoLift;
    std::optional<GwMatrix> witness;  // present iff Lifted; support matches, verify ok
    unsigned long long nodes = 0;
};

struct LiftOptions {
    unsigned long long budget = 100'000'000;  // node limit
    bool normalize = true;                    // dephase first row and row-leading entries
    int threads = 1;
};

LiftResult lift(const LiftInstance& inst, const LiftOptions& opts = {});

// Independent ground truth: enumerates all k^(#ones) assignments.
// Refuses instances with more than 12 nonzero cells.
LiftResult brute_lift_oracle(const LiftInstance& inst);

// Decides a whole parameter cell by backtracking over candidate supports
// (constant line sums w, pairwise overlaps restricted to Lam-Leung feasible
// counts, rows in sorted order) and lifting each candidate. Used to settle
// the handful of grid cells the analytic rules do not reach.
struct CellResult {
    LiftStatus status = LiftStatus::NoLift;
    std::optional<GwMatrix> witness;
    unsigned long long nodes = 0;          // lift nodes across all candidates
    unsigned long long supports_tried = 0;
};

CellResult lift_cell(int n, int w, int k, unsigned long long budget = 2'000'000'000ULL);

// Exact (for k with at most two prime factors) or conservative test: can a
// partial Hermitian inner product with coefficient counts `coeffs` still
// reach zero after `remaining` more unit-root terms are added? Exposed for
// the pruning-soundness tests.
bool completion_feasible(const std::vector<long long>& coeffs, long long remaining, int k);

}  // namespace cgw
