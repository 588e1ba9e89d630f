// Direct and recursive CGW constructions: generalized Paley, Berman's
// affine-geometry families, Seberry-Whiteman, complementary-sequence
// (WPPGP) doubling, direct sums, bordered pairs, Kronecker and Dita
// products, and weaving. Every operation returns a matrix that passes
// exact verification; most callers should treat a throw as a violated
// precondition rather than a soft failure.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgw/cyclotomic.hpp"
#include "cgw/matrix.hpp"

namespace cgw {

// Fourier matrix [zeta_k^(ij)], the standard BH(k,k).
GwMatrix fourier(int k);

// Bordered circulant core over the multiplicative character
// phi(x^j) = zeta_p^j of F_q; a CGW(q+1, q; p). q may be any prime power
// with p | q - 1 (prime q uses Z_q directly).
GwMatrix paley_cgw(long long q, int p);

// Berman's construction from the affine geometry over F_{p^n}: points and
// hyperplanes of F^t away from the origin, folded by the collineation
// x -> lambda x of order r, entries zeta_d^v. Yields a verified
// CGW((p^tn - 1)/r, p^((t-1)n); d) for d | r, r | p^n - 1, t >= 2.
GwMatrix berman_cgw(int p, int n, int t, int r, int d);

// Seberry-Whiteman: for a prime power q = 1 mod 8, builds the two
// circulants R, S from the eighth-power character chi over GF(q^2) and
// assembles [[R, S], [S*, -R*]]; a CGW(q+1, q; 4).
GwMatrix sw_cgw(long long q);
// The derived first rows (r, s) for a given primitive element tau = prim^t;
// exposed so tests can match the published example sequences.
std::pair<UkSeq, UkSeq> sw_sequences(long long q, long long tau_log = 1);

// Weighted alpha-phased periodic Golay pair check:
// PPAF_{alpha,s}(a) + PPAF_{alpha,s}(b) = 0 for all shifts.
bool is_wppgp(const UkSeq& a, const UkSeq& b, int alpha_exp);

// Doubling construction [[A, B], [-B*, A*]] from alpha-circulants with
// first rows a and b. Result is a CGW(2v, w_a + w_b; k) for even k and a
// CGW(2v, w_a + w_b; 2k) for odd k. Throws if the pair is not complementary.
GwMatrix wppgp_to_cgw(const UkSeq& a, const UkSeq& b, int alpha_exp);

// Aperiodic ternary Golay property for {0, +-1} sequences.
bool is_ternary_golay(const std::vector<int>& a, const std::vector<int>& b);

// Embeds a {0, +-1} sequence into U_k (k even): 1 -> exponent 0,
// -1 -> exponent k/2.
UkSeq ternary_to_uk(const std::vector<int>& a, int k);

GwMatrix direct_sum(const GwMatrix& a, const GwMatrix& b);

// [[A, B], [-B*, A*]] for commuting A, B of equal order; requires AB = BA
// exactly over Z[zeta_lcm]. CGW(2n, w1 + w2; lcm(k1, k2, 2)).
GwMatrix border_pair(const GwMatrix& a, const GwMatrix& b);

GwMatrix kronecker(const GwMatrix& a, const GwMatrix& b);

// Dita's generalization: block matrix [a_ij B_j]. All B_i must share order
// and weight (equal weights keep the result's weight well defined).
GwMatrix dita(const GwMatrix& a, const std::vector<GwMatrix>& bs);

// Craigen's weaving: a 0/1 mask M with row sums r_i and column sums c_j,
// CGWs A_i of order r_i and weight a, B_j of order c_j and weight b;
// blocks are the rank-one products A_i[.,p] B_j[q,.]. CGW(sigma(M), ab).
GwMatrix weave(const std::vector<std::vector<int>>& mask, const std::vector<GwMatrix>& as,
               const std::vector<GwMatrix>& bs);

// Recipe strings "name(key=value,...)" with integer parameters; the grammar
// used in witness-library metadata and by the CLI construct subcommand.
struct Recipe {
    std::string name;
    std::map<std::string, long long> params;

    long long get(const std::string& key) const;  // throws on missing key
    std::string to_string() const;
};

Recipe parse_recipe(const std::string& text);

// Builds the named primitive construction. Supported names: identity(n=),
// fourier(k=), paley(q=,p=), berman(p=,n=,t=,r=,d=), sw(q=),
// wppgp(pair=<id in the bundled pair library>).
GwMatrix build_recipe(const Recipe& r);

// Bundled WPPGP pair library (data/wppgp_pairs.txt).
struct WppgpPair {
    int id = 0;
    int k = 1;
    int alpha_exp = 0;
    UkSeq a, b;
    std::string note;
};

std::vector<WppgpPair> load_wppgp_pairs(const std::string& path);
const std::vector<WppgpPair>& bundled_wppgp_pairs();

// Directory containing the bundled data files; overridable with the
// CGW_DATA environment variable.
std::string data_dir();

}  // namespace cgw
