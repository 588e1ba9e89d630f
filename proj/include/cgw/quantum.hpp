// Quantum code parameters from Hermitian self-orthogonal codes: an
// [n,k]_{q^2} self-orthogonal code with dual minimum weight d yields an
// [[n, n-2k, >=d]]_q stabilizer code. The pipeline chains the embedding,
// the self-orthogonality check, and the two distance computations.

#pragma once

#include <string>

#include "cgw/codes.hpp"
#include "cgw/matrix.hpp"

namespace cgw {

struct QuantumParams {
    int n = 0;
    int kq = 0;  // n - 2 dim(C)
    int d = 0;   // exact dual minimum weight (the theorem guarantees >= d)
    int q = 0;
    std::string provenance;
};

struct PipelineReport {
    QuantumParams params;
    int code_dim = 0;
    int code_dist = 0;  // distance of the classical code itself
    uint32_t q2 = 0;
    std::string text;       // one line per stage
    std::string flat;       // machine-readable key=value lines
};

// derive_params requires is_hso(C); d is the exact minimum weight of the
// Hermitian dual (for a self-dual code that equals the code's own weight).
QuantumParams derive_params(const LinearCode& c, unsigned long long budget = 1'000'000'000ULL, int threads = 1);

// Full chain W -> f(W) -> [[n, n-2k, d]]_q. Requires W.k = q + 1 for a
// prime power q and char divides the weight; throws otherwise, naming the
// admissible root orders.
PipelineReport pipeline(const GwMatrix& w, unsigned long long budget = 1'000'000'000ULL, int threads = 1,
                        bool skip_code_distance = false);

// The prime power q with k = q + 1, or 0 if none.
long long prime_power_q_for_k(int k);

}  // namespace cgw
