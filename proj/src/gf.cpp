#include "cgw/gf.hpp"

#include <stdexcept>

#include "cgw/cyclotomic.hpp"

namespace cgw {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Digits of x in base p, little-endian (digit i = coefficient of x^i).
inline void digits_of(uint32_t x, int p, int m, int* out) {
    for (int i = 0; i < m; ++i) {
        out[i] = static_cast<int>(x % p);
        x /= static_cast<uint32_t>(p);
    }
}

}  // namespace

uint32_t FieldCtx::poly_mul(uint32_t a, uint32_t b) const {
    // Schoolbook product of the polynomial representatives, reduced by the
    // modulus. Only used while building tables; hot-path mul is table-based.
    std::vector<int> da(m_), db(m_), prod(2 * m_ - 1, 0);
    digits_of(a, p_, m_, da.data());
    digits_of(b, p_, m_, db.data());
    for (int i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d = x^(d-m) * (-(modulus minus leading term))
        for (int j = 0; j < m_; ++j) {
            int t = prod[d - m_ + j] - c * modulus_[j] % p_;
            prod[d - m_ + j] = ((t % p_) + p_) % p_;
        }
    }
    uint32_t r = 0;
    for (int i = m_ - 1; i >= 0; --i) r = r * p_ + static_cast<uint32_t>(prod[i]);
    return r;
}

FieldCtx::FieldCtx(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("FieldCtx: degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > (1 << 20)) throw std::invalid_argument("FieldCtx: field size exceeds 2^20");
    }
    q_ = static_cast<uint32_t>(q);

    // Lexicographically least monic irreducible, coefficients compared
    // low-degree first: counter digits are assigned so that c_0 is the most
    // significant, making increasing counters enumerate candidates in
    // exactly that order. Irreducibility by trial division over monic
    // divisors of degree <= m/2.
    auto poly_from_counter = [&](uint32_t t) {
        std::vector<int> c(m_ + 1, 0);
        c[m_] = 1;
        for (int i = m_ - 1; i >= 0; --i) {  // i = coefficient position, filled least significant last
            c[i] = static_cast<int>(t % p_);
            t /= static_cast<uint32_t>(p_);
        }
        return c;
    };

    auto poly_mod = [&](std::vector<int> num, const std::vector<int>& den) {
        // num, den low-degree-first; den monic of degree d.
        int dd = static_cast<int>(den.size()) - 1;
        for (int d = static_cast<int>(num.size()) - 1; d >= dd; --d) {
            int c = num[d];
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                int t = num[d - dd + j] - c * den[j] % p_;
                num[d - dd + j] = ((t % p_) + p_) % p_;
            }
        }
        num.resize(dd);
        return num;
    };

    auto is_zero_poly = [](const std::vector<int>& v) {
        for (int c : v)
            if (c) return false;
        return true;
    };

    if (m_ == 1) {
        modulus_ = {0, 1};  // x; elements are residues mod p
    } else {
        // All monic candidates of degree 1..m/2 serve as trial divisors.
        std::vector<std::vector<int>> divisors;
        for (int d = 1; d <= m_ / 2; ++d) {
            uint32_t count = 1;
            for (int i = 0; i < d; ++i) count *= static_cast<uint32_t>(p_);
            for (uint32_t t = 0; t < count; ++t) {
                std::vector<int> c(d + 1, 0);
                c[d] = 1;
                uint32_t x = t;
                for (int i = 0; i < d; ++i) {
                    c[i] = static_cast<int>(x % p_);
                    x /= static_cast<uint32_t>(p_);
                }
                divisors.push_back(std::move(c));
            }
        }
        uint32_t count = 1;
        for (int i = 0; i < m_; ++i) count *= static_cast<uint32_t>(p_);
        bool found = false;
        for (uint32_t t = 0; t < count && !found; ++t) {
            std::vector<int> cand = poly_from_counter(t);
            bool irred = true;
            for (const auto& d : divisors) {
                if (is_zero_poly(poly_mod(cand, d))) {
                    irred = false;
                    break;
                }
            }
            if (irred) {
                modulus_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("FieldCtx: no irreducible polynomial found");
    }

    // Least primitive element; order checked against the prime factors of q-1.
    auto fac = prime_factors(q_ - 1);
    auto order_is_full = [&](uint32_t x) {
        for (long long f : fac) {
            long long e = (q_ - 1) / f;
            uint32_t y = 1;
            uint32_t base = x;
            long long ee = e;
            while (ee) {
                if (ee & 1) y = poly_mul(y, base);
                base = poly_mul(base, base);
                ee >>= 1;
            }
            if (y == 1) return false;
        }
        return true;
    };
    for (uint32_t x = 1; x < q_; ++x) {
        if (q_ == 2 && x == 1) {
            prim_ = 1;
            break;
        }
        if (x == 1) continue;
        if (order_is_full(x)) {
            prim_ = x;
            break;
        }
    }
    if (prim_ == 0) throw std::logic_error("FieldCtx: no primitive element found");

    log_.assign(q_, 0);
    antilog_.assign(q_ - 1, 0);
    uint32_t acc = 1;
    for (uint32_t t = 0; t < q_ - 1; ++t) {
        antilog_[t] = acc;
        log_[acc] = t;
        acc = poly_mul(acc, prim_);
    }
    if (acc != 1) throw std::logic_error("FieldCtx: primitive element order check failed");

    if (q_ <= 512) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        neg_tab_.resize(q_);
        for (uint32_t a = 0; a < q_; ++a) {
            neg_tab_[a] = [&] {
                uint32_t r = 0, f = 1, x = a;
                for (int i = 0; i < m_; ++i) {
                    r += f * ((p_ - x % p_) % p_);
                    x /= static_cast<uint32_t>(p_);
                    f *= static_cast<uint32_t>(p_);
                }
                return r;
            }();
            for (uint32_t b = 0; b < q_; ++b) add_tab_[static_cast<std::size_t>(a) * q_ + b] = add_slow(a, b);
        }
    }
}

uint32_t FieldCtx::add_slow(uint32_t a, uint32_t b) const {
    uint32_t r = 0, f = 1;
    for (int i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += f * ((da + db) % p_);
        f *= static_cast<uint32_t>(p_);
    }
    return r;
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
}

uint32_t FieldCtx::neg(uint32_t a) const {
    if (!neg_tab_.empty()) return neg_tab_[a];
    uint32_t r = 0, f = 1;
    for (int i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        r += f * ((p_ - da) % p_);
        f *= static_cast<uint32_t>(p_);
    }
    return r;
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t t = log_[a] + log_[b];
    if (t >= q_ - 1) t -= q_ - 1;
    return antilog_[t];
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
    uint32_t t = log_[a];
    return antilog_[t == 0 ? 0 : q_ - 1 - t];
}

uint32_t FieldCtx::pow(uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("FieldCtx::pow: zero to negative power");
        return e == 0 ? 1 : 0;
    }
    long long t = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    if (t < 0) t += q_ - 1;
    return antilog_[t];
}

uint32_t FieldCtx::ind(uint32_t a) const {
    if (a == 0) throw std::domain_error("FieldCtx::ind: index of zero is undefined");
    return log_[a];
}

uint32_t FieldCtx::from_ind(long long t) const {
    t %= (q_ - 1);
    if (t < 0) t += q_ - 1;
    return antilog_[t];
}

uint32_t FieldCtx::subfield_order() const {
    if (m_ % 2 != 0) throw std::domain_error("FieldCtx: not of square order");
    uint32_t q = 1;
    for (int i = 0; i < m_ / 2; ++i) q *= static_cast<uint32_t>(p_);
    return q;
}

uint32_t FieldCtx::frobenius(uint32_t x) const {
    uint32_t q = subfield_order();
    if (x == 0) return 0;
    return pow(x, q);
}

}  // namespace cgw
