// Linear codes over GF(q^2) obtained from CGWs through the root-of-unity
// embedding f(zeta_k^j) = alpha^j, Hermitian self-orthogonality, Hermitian
// duals, and exact minimum distance by two independent strategies.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgw/gf.hpp"
#include "cgw/matrix.hpp"

namespace cgw {

class LinearCode {
public:
    // Rows may be dependent; the reduced row echelon form and rank are
    // computed once with deterministic pivoting.
    LinearCode(std::shared_ptr<const FieldCtx> ctx, int n, std::vector<std::vector<uint32_t>> gen);

    const FieldCtx& field() const { return *ctx_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return ctx_; }
    int length() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<std::vector<uint32_t>>& gen() const { return gen_; }
    const std::vector<std::vector<uint32_t>>& rref() const { return rref_; }

    bool contains(const std::vector<uint32_t>& word) const;

private:
    std::shared_ptr<const FieldCtx> ctx_;
    int n_;
    std::vector<std::vector<uint32_t>> gen_;
    std::vector<std::vector<uint32_t>> rref_;
    int dim_;
};

// f(W) as a generator matrix over GF(q^2) where W.k = q + 1 and
// alpha = prim^(q-1) is the fixed primitive (q+1)-th root.
LinearCode cgw_to_code(const GwMatrix& w, std::shared_ptr<const FieldCtx> ctx);

// G (G^q)^T == 0, i.e. C is contained in its Hermitian dual.
bool is_hso(const LinearCode& c);

// Ambient-space Hermitian dual {x : <x,y>_H = 0 for all y in C};
// dim(C^H) = n - dim(C).
LinearCode hermitian_dual(const LinearCode& c);

struct MinDistResult {
    bool exact = false;  // false means the budget was exhausted
    int distance = 0;
    unsigned long long evaluations = 0;
    char strategy = '-';  // 'A' projective message scan, 'B' small-weight probe
};

// Exact minimum Hamming weight over nonzero codewords. Strategy A
// enumerates projective messages; strategy B enumerates ascending-weight
// candidate words and tests membership. Both are exact; the cheaper one
// under the budget is used.
MinDistResult min_distance(const LinearCode& c, unsigned long long budget = 1'000'000'000ULL, int threads = 1);

// Code file format: "CODE q2=<q^2> n=<n> rows=<r>" then r rows of n indices.
std::string serialize_code(const LinearCode& c);
LinearCode parse_code_text(const std::string& text);
LinearCode load_code_file(const std::string& path);

// Weight distribution by full projective scan (CSV support for the CLI).
std::vector<unsigned long long> weight_distribution(const LinearCode& c, unsigned long long budget = 1'000'000'000ULL);

}  // namespace cgw
