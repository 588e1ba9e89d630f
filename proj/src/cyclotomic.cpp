#include "cgw/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cgw {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: integer overflow in add");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: integer overflow in sub");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: integer overflow in mul");
    return r;
}

namespace {

// Exact division of integer polynomials, low degree first. Throws if the
// division is not exact; the cyclotomic recursion guarantees it is.
std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (den.empty() || den.back() != 1)
        throw std::logic_error("poly_divide_exact: divisor must be monic");
    if (num.size() < den.size()) {
        for (long long c : num)
            if (c != 0) throw std::logic_error("poly_divide_exact: inexact division");
        return {0};
    }
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        long long q = num[i + den.size() - 1];
        quot[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] = checked_sub(num[i + j], checked_mul(q, den[j]));
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: k must be positive");
    static std::map<int, std::vector<long long>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    // Phi_k = (x^k - 1) / prod_{d|k, d<k} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (int m = 1; m <= k; ++m) {
        if (k % m != 0 || memo.count(m)) continue;
        std::vector<long long> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divide_exact(std::move(num), memo.at(d));
        memo.emplace(m, std::move(num));
    }
    return memo.at(k);
}

CycElt::CycElt(int order) : k_(order) {
    if (order < 1) throw std::invalid_argument("CycElt: order must be >= 1");
    c_.assign(static_cast<std::size_t>(order), 0);
}

CycElt CycElt::root(int order, long long exponent) {
    CycElt r(order);
    long long e = exponent % order;
    if (e < 0) e += order;
    r.c_[static_cast<std::size_t>(e)] = 1;
    return r;
}

CycElt CycElt::from_coeffs(int order, std::vector<long long> coeffs) {
    if (order < 1) throw std::invalid_argument("CycElt: order must be >= 1");
    if (coeffs.size() != static_cast<std::size_t>(order))
        throw std::invalid_argument("CycElt: coefficient vector must have length k");
    CycElt r(order);
    r.c_ = std::move(coeffs);
    return r;
}

CycElt operator+(const CycElt& a, const CycElt& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("CycElt: root order mismatch");
    CycElt r(a.k_);
    for (int j = 0; j < a.k_; ++j) r.c_[j] = checked_add(a.c_[j], b.c_[j]);
    return r;
}

CycElt operator-(const CycElt& a, const CycElt& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("CycElt: root order mismatch");
    CycElt r(a.k_);
    for (int j = 0; j < a.k_; ++j) r.c_[j] = checked_sub(a.c_[j], b.c_[j]);
    return r;
}

CycElt CycElt::operator-() const {
    CycElt r(k_);
    for (int j = 0; j < k_; ++j) r.c_[j] = checked_sub(0, c_[j]);
    return r;
}

// Convolution with exponents reduced mod k.
CycElt operator*(const CycElt& a, const CycElt& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("CycElt: root order mismatch");
    CycElt r(a.k_);
    for (int i = 0; i < a.k_; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < a.k_; ++j) {
            if (b.c_[j] == 0) continue;
            int t = i + j;
            if (t >= a.k_) t -= a.k_;
            r.c_[t] = checked_add(r.c_[t], checked_mul(a.c_[i], b.c_[j]));
        }
    }
    return r;
}

CycElt CycElt::conj() const {
    CycElt r(k_);
    for (int j = 0; j < k_; ++j) r.c_[j] = c_[(k_ - j) % k_];
    return r;
}

bool CycElt::is_zero() const {
    const auto& phi = cyclotomic_polynomial(k_);
    // Remainder of sum c_j x^j modulo Phi_k; zero in Z[zeta_k] iff it vanishes.
    std::vector<long long> rem = c_;
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > deg;) {
        long long q = rem[i];
        if (q == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j)
            rem[i - deg + j] = checked_sub(rem[i - deg + j], checked_mul(q, phi[j]));
    }
    for (std::size_t i = 0; i < deg && i < rem.size(); ++i)
        if (rem[i] != 0) return false;
    return true;
}

bool CycElt::operator==(const CycElt& b) const {
    if (k_ != b.k_) return false;
    return (*this - b).is_zero();
}

std::complex<long double> CycElt::eval() const {
    std::complex<long double> s{0, 0};
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    for (int j = 0; j < k_; ++j) {
        if (c_[j] == 0) continue;
        long double arg = tau * j / k_;
        s += static_cast<long double>(c_[j]) * std::complex<long double>(std::cos(arg), std::sin(arg));
    }
    return s;
}

std::string CycElt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < k_; ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << (c_[j] > 0 ? " + " : " - ");
        else if (c_[j] < 0) os << "-";
        long long m = c_[j] > 0 ? c_[j] : -c_[j];
        if (m != 1 || j == 0) os << m;
        if (j > 0) {
            if (m != 1) os << "*";
            os << "z" << k_ << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long long squarefree_part(long long n) {
    long long r = 1;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e & 1) r *= p;
    }
    return r * n;
}

bool lam_leung_feasible(long long weightsum, int k) {
    if (weightsum < 0) throw std::invalid_argument("lam_leung_feasible: negative weight sum");
    if (weightsum == 0) return true;
    auto ps = prime_factors(k);
    if (ps.empty()) return false;  // k = 1, nothing to combine
    // Subset-sum over the primes dividing k, unbounded coefficients.
    std::vector<char> reach(static_cast<std::size_t>(weightsum) + 1, 0);
    reach[0] = 1;
    for (long long p : ps)
        for (long long s = p; s <= weightsum; ++s)
            if (reach[s - p]) reach[s] = 1;
    return reach[static_cast<std::size_t>(weightsum)] != 0;
}

int UkSeq::weight() const {
    int w = 0;
    for (int16_t x : e)
        if (x >= 0) ++w;
    return w;
}

CycElt ppaf(const UkSeq& a, int alpha_exp, int s) {
    const int v = static_cast<int>(a.e.size());
    const int k = a.k;
    if (v < 1) throw std::invalid_argument("ppaf: empty sequence");
    if (s < 1 || s > v - 1) throw std::out_of_range("ppaf: shift must lie in 1..v-1");
    if (alpha_exp < 0 || alpha_exp >= k) throw std::invalid_argument("ppaf: alpha exponent out of range");
    for (int16_t x : a.e)
        if (x >= k) throw std::invalid_argument("ppaf: entry exponent out of range");

    // (a C_alpha^s)_j = a_{j-s} for j >= s, and alpha * a_{v-s+j} for j < s.
    CycElt acc(k);
    std::vector<long long> coeffs(k, 0);
    for (int j = 0; j < v; ++j) {
        if (a.e[j] < 0) continue;
        int src = j - s;
        int extra = 0;
        if (src < 0) {
            src += v;
            extra = alpha_exp;
        }
        if (a.e[src] < 0) continue;
        // a_j * conj(shifted_j): exponent difference mod k.
        int t = ((a.e[j] - a.e[src] - extra) % k + k) % k;
        coeffs[t] = checked_add(coeffs[t], 1);
    }
    return CycElt::from_coeffs(k, std::move(coeffs));
}

}  // namespace cgw
