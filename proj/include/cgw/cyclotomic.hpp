// Exact arithmetic in Z[zeta_k], the ring of integers extended by a k-th
// root of unity. Elements are integer coefficient vectors of length k
// (coeffs[j] multiplies zeta_k^j); equality and the zero test reduce modulo
// the k-th cyclotomic polynomial, so orthogonality decisions are exact.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cgw {

// Overflow-checked 64-bit helpers. Desk-scale inputs never get close to the
// limits, but the contract is checked arithmetic, not proven bounds.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

// k-th cyclotomic polynomial Phi_k as an integer coefficient vector
// (low degree first, monic). Computed by dividing x^k - 1 by Phi_d for all
// proper divisors d | k; results are memoized per k.
const std::vector<long long>& cyclotomic_polynomial(int k);

class CycElt {
public:
    explicit CycElt(int order);  // zero element of Z[zeta_order]
    static CycElt root(int order, long long exponent);  // zeta_order^exponent
    static CycElt from_coeffs(int order, std::vector<long long> coeffs);

    int order() const { return k_; }
    const std::vector<long long>& coeffs() const { return c_; }

    CycElt conj() const;  // zeta^j -> zeta^(k-j); an involution
    bool is_zero() const;

    // Numerical value; used only by tests as a floating-point cross-check.
    std::complex<long double> eval() const;

    std::string to_string() const;

    friend CycElt operator+(const CycElt& a, const CycElt& b);
    friend CycElt operator-(const CycElt& a, const CycElt& b);
    friend CycElt operator*(const CycElt& a, const CycElt& b);
    CycElt operator-() const;

    // Ring equality: the difference reduces to zero modulo Phi_k.
    bool operator==(const CycElt& b) const;
    bool operator!=(const CycElt& b) const { return !(*this == b); }

private:
    int k_;
    std::vector<long long> c_;
};

// Lam-Leung feasibility: can `weightsum` be written as a non-negative
// integer combination of the distinct primes dividing k? A vanishing sum of
// k-th roots of unity has exactly such a term count, so this bounds which
// row overlaps can cancel.
bool lam_leung_feasible(long long weightsum, int k);

// Distinct prime factors, ascending.
std::vector<long long> prime_factors(long long n);

// Largest square-free divisor.
long long squarefree_part(long long n);

// Shared encoding for U_k values in matrices and sequences: kZeroEntry for
// the zero element, otherwise the exponent e meaning zeta_k^e.
inline constexpr int16_t kZeroEntry = -1;

// Sequences over U_k = {0} union <zeta_k>.
struct UkSeq {
    int k = 1;
    std::vector<int16_t> e;

    std::size_t size() const { return e.size(); }
    int weight() const;
};

// alpha-phased periodic autocorrelation PPAF_{alpha,s}(a) = a (a C_alpha^s)*,
// where C_alpha is the alpha-phased cyclic shift. alpha is a nonzero element
// of U_k given by its exponent; s must lie in 1..v-1.
CycElt ppaf(const UkSeq& a, int alpha_exp, int s);

}  // namespace cgw
