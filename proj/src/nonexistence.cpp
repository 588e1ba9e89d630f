#include "cgw/nonexistence.hpp"

#include <stdexcept>

#include "cgw/cyclotomic.hpp"
#include "cgw/gf.hpp"

namespace cgw {

namespace {

bool is_square(long long x) {
    if (x < 0) return false;
    long long r = 0;
    while (r * r < x) ++r;
    return r * r == x;
}

// Multiplicative order of m modulo prime k; requires gcd(m, k) = 1.
int order_mod(long long m, int k) {
    long long x = ((m % k) + k) % k;
    long long y = x;
    int ord = 1;
    while (y != 1) {
        y = (y * x) % k;
        ++ord;
        if (ord > k) throw std::logic_error("order_mod: not invertible");
    }
    return ord;
}

bool sum_of_two_squares(long long w) {
    // By the two-squares theorem: no prime p = 3 mod 4 divides the
    // squarefree part.
    long long sf = squarefree_part(w);
    for (long long p : prime_factors(sf))
        if (p % 4 == 3) return false;
    return true;
}

}  // namespace

bool sbibd_feasible(int n, int w, int lambda) {
    if (!(n > w && w > lambda && lambda >= 0))
        throw std::invalid_argument("sbibd_feasible: requires n > w > lambda >= 0");
    return static_cast<long long>(lambda) * (n - 1) == static_cast<long long>(w) * (w - 1);
}

RuleVerdict analytic_rules(int n, int w, int k) {
    if (!(n >= w && w >= 1 && k >= 2)) throw std::invalid_argument("analytic_rules: need n >= w >= 1 and k >= 2");
    RuleVerdict v;
    auto fire = [&](const std::string& id, const std::string& anchor) {
        v.rules_fired.push_back(RuleHit{id, anchor});
    };

    const bool k_prime = is_prime(k);
    const long long ww1 = static_cast<long long>(w) * (w - 1);

    if (k_prime && n != w) {
        if (ww1 % k != 0) fire("thm2.3(i)", "w(w-1) = 0 mod k");
        long long sigma = ((static_cast<long long>(n) - 2 * w) % k + k) % k;
        long long lhs = static_cast<long long>(n - w) * (n - w) - (n - w);
        if (lhs < sigma * (n - 1)) fire("thm2.3(ii)", "(n-w)^2 - (n-w) >= sigma(n-1), sigma = n-2w mod k");
        if (k == 2 && n % 2 == 1 && !is_square(w)) fire("thm2.3(iii)", "if n is odd and k = 2, then w is a square");
    }

    // Lemma 2.2 determinant-norm corollaries; unlike thm2.3(iii) these do
    // not assume n != w.
    if (k == 2 && n % 2 == 1 && !is_square(w)) fire("lemma2.2.square", "|det(W)|^2 = w^n (odd n forces square w)");
    if (k == 4 && n % 2 == 1 && !sum_of_two_squares(w))
        fire("lemma2.2.twosquares", "w is the sum of two integer squares");

    if (k_prime && n % 2 == 1) {
        long long sf = squarefree_part(w);
        for (long long m = 2; m <= sf; ++m) {
            if (sf % m != 0 || m % k == 0) continue;
            if (order_mod(m, k) % 2 == 0) {
                fire("thm2.4", "the order of m modulo k is odd (m=" + std::to_string(m) + ")");
                break;
            }
        }
    }

    // Winterhof: Butson matrices, k = p^r or 2p^r with p = 3 mod 4, odd n.
    if (n == w && n % 2 == 1) {
        int kk = k;
        if (kk % 2 == 0) kk /= 2;
        auto pf = prime_factors(kk);
        if (pf.size() == 1 && pf[0] % 4 == 3 && (k % 2 == 0 ? k / 2 : k) == kk) {
            long long p = pf[0];
            long long rest = n;
            while (rest % p == 0) rest /= p;
            long long m = squarefree_part(rest);
            for (long long qp : prime_factors(m)) {
                bool qr = false;
                for (long long x = 1; x < p; ++x)
                    if ((x * x) % p == qp % p) {
                        qr = true;
                        break;
                    }
                if (!qr) {
                    fire("thm2.5", "q is a non-quadratic residue modulo p (q=" + std::to_string(qp) + ")");
                    break;
                }
            }
        }
    }

    if (k == 6 && n % 2 == 1) {
        if (w % 3 == 2) fire("k6.w2mod3", "n is odd and w = 2 mod 3");
        if (w % 4 == 2) fire("k6.w2mod4", "n is odd and w = 2 mod 4");
        if (w % 9 == 6) fire("k6.w6mod9", "n is odd and w = 6 mod 9");
        for (long long p : prime_factors(squarefree_part(w))) {
            if (p % 3 == 2) {
                fire("prop2.9", "squarefree part of w be divisible by p (p=" + std::to_string(p) + ")");
                break;
            }
        }
    }

    // Lam-Leung overlap structure. Full weight: any two rows overlap in all
    // n positions, so n must be a sum of primes dividing k.
    if (n == w && !lam_leung_feasible(n, k))
        fire("ll.butson", "the primes dividing k (full-weight overlap n must vanish)");

    // Weight k with k prime: overlaps lie in {0, k}, forcing a block
    // decomposition into k x k all-ones blocks, hence k | n. Existence for
    // k | n is witnessed by direct sums of Fourier matrices.
    if (k_prime && w == k && n % k != 0)
        fire("ll.block", "rows coincide in a multiple of p positions (weight-k block structure)");

    if (k == 3 && w == 4 && n % 5 != 0) fire("prop.n43", "if and only if n = 0 mod 5");

    v.applicable = !v.rules_fired.empty();
    return v;
}

std::optional<RuleHit> sporadic(int n, int w, int k) {
    if (n == 10 && w == 6 && k == 3) return RuleHit{"sporadic.10.6.3", "no matrix in CGW(10,6;3)"};
    if (n == 10 && w == 7 && k == 4) return RuleHit{"sporadic.10.7.4", "There is no CGW(10,7;4)"};
    if (n == 11 && w == 5 && k == 4) return RuleHit{"sporadic.11.5.4", "There is no CGW(11,5;4)"};
    if (k == 3 && w == 4 && n % 5 != 0) return RuleHit{"prop.n43", "if and only if n = 0 mod 5"};
    return std::nullopt;
}

}  // namespace cgw
