// GF(p^m) with deterministic construction: the modulus is the
// lexicographically least monic irreducible of degree m over GF(p)
// (coefficients compared low-degree first) and the primitive element is the
// least index of full multiplicative order. Elements are indices 0..p^m-1,
// the little-endian base-p encoding of the polynomial representative;
// multiplication runs through log/antilog tables.

#pragma once

#include <cstdint>
#include <vector>

namespace cgw {

bool is_prime(long long n);

class FieldCtx {
public:
    FieldCtx(int p, int m);  // requires p prime, p^m <= 2^20

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    uint32_t size() const { return q_; }
    uint32_t prim() const { return prim_; }
    const std::vector<int>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;         // domain error on 0
    uint32_t pow(uint32_t a, long long e) const;
    uint32_t ind(uint32_t a) const;         // discrete log base prim; domain error on 0
    uint32_t from_ind(long long t) const;   // prim^t

    // x -> x^q for a context of square order q^2 (constructed with even m);
    // an involution fixing the order-q subfield. Domain error otherwise.
    uint32_t frobenius(uint32_t x) const;
    uint32_t subfield_order() const;  // q, for even-degree contexts

private:
    int p_;
    int m_;
    uint32_t q_;
    std::vector<int> modulus_;  // degree m, monic, low-degree-first, length m+1
    uint32_t prim_ = 0;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> antilog_;
    // Small fields additionally get dense add/neg tables; the distance
    // kernel's inner loop needs branch-free addition.
    std::vector<uint32_t> add_tab_;
    std::vector<uint32_t> neg_tab_;

    uint32_t poly_mul(uint32_t a, uint32_t b) const;  // table-free, used for setup
    uint32_t add_slow(uint32_t a, uint32_t b) const;
};

}  // namespace cgw
