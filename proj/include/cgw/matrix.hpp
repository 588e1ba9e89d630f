// GwMatrix: square matrices over U_k = {0} union <zeta_k>, exact CGW
// verification, monomial equivalence transforms, a coarse equivalence
// fingerprint, and the bit-exact text codec.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "cgw/cyclotomic.hpp"

namespace cgw {

class GwMatrix {
public:
    GwMatrix(int n, int k);  // zero matrix
    static GwMatrix identity(int n, int k = 1);

    int order() const { return n_; }
    int root_order() const { return k_; }

    int16_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int16_t v);

    bool is_zero_at(int i, int j) const { return at(i, j) < 0; }
    int row_weight(int i) const;
    int col_weight(int j) const;

    // Same matrix with every exponent rescaled into U_{k_new}; requires
    // k | k_new (the embedding zeta_k = zeta_{k_new}^{k_new/k}).
    GwMatrix reencode(int k_new) const;

    // 0/1 support pattern, returned over U_1.
    GwMatrix support() const;

    // Hermitian inner product of rows i and j, exact in Z[zeta_k].
    CycElt row_inner(int i, int j) const;

    bool operator==(const GwMatrix& o) const { return n_ == o.n_ && k_ == o.k_ && e_ == o.e_; }

private:
    int n_;
    int k_;
    std::vector<int16_t> e_;
};

struct VerifyReport {
    bool ok = false;
    std::optional<int> weight;
    // First failing row pair and its nonzero Hermitian inner product.
    struct Failure {
        int i;
        int j;
        CycElt value;
    };
    std::optional<Failure> first_failure;
    std::string message;  // diagnostics for non-orthogonality failures
    // Filled only when requested: every failing pair (full Gram dump).
    std::vector<Failure> all_failures;
};

// Checks the CGW property: constant row weight w and pairwise Hermitian
// orthogonality of rows. Column weights are re-checked as a sanity
// assertion (they follow for square invertible matrices).
VerifyReport verify(const GwMatrix& m, bool full_gram = false);

struct Monomial {
    std::vector<int> perm;    // bijection on 0..n-1
    std::vector<int> scale;   // exponents in 0..k-1
};

// W' = P W Q* for the monomial matrices described by (row, col);
// result[i][j] = zeta^{row.scale[i]} * W[row.perm[i]][col.perm[j]] * zeta^{-col.scale[j]}.
GwMatrix transform(const GwMatrix& m, const Monomial& row, const Monomial& col);

// Deterministic byte string invariant under monomial equivalence: (n, w, k)
// plus the sorted multisets of pairwise support intersection sizes for rows
// and for columns. Deliberately not a complete invariant.
std::string fingerprint(const GwMatrix& m);

// Text format: optional '#' comment lines, then "CGW n=<n> w=<w> k=<k>",
// then n rows of n whitespace-separated tokens ('.' or an exponent).
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_);
};

GwMatrix parse_matrix(std::istream& in);
GwMatrix parse_matrix_text(const std::string& text);
GwMatrix load_matrix_file(const std::string& path);

std::string serialize_matrix(const GwMatrix& m);
void save_matrix_file(const GwMatrix& m, const std::string& path, const std::string& comment = "");

}  // namespace cgw
