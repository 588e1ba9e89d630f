#include "cgw/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgw/gf.hpp"

namespace cgw {

namespace {

GwMatrix checked(GwMatrix m, const char* what) {
    VerifyReport rep = verify(m);
    if (!rep.ok) throw std::logic_error(std::string(what) + ": construction failed verification: " + rep.message);
    return m;
}

int lcm_int(int a, int b) { return static_cast<int>(std::lcm(a, b)); }

}  // namespace

GwMatrix fourier(int k) {
    if (k < 1) throw std::invalid_argument("fourier: k must be >= 1");
    GwMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.set(i, j, static_cast<int16_t>((i * j) % k));
    return checked(std::move(m), "fourier");
}

GwMatrix paley_cgw(long long q, int p) {
    if (!is_prime(p)) throw std::invalid_argument("paley_cgw: p must be prime");
    if (q < 2 || (q - 1) % p != 0) throw std::invalid_argument("paley_cgw: requires q = 1 mod p");

    // F_q via the deterministic field context (plain Z_q when q is prime);
    // x = the context's primitive element, phi(x^j) = zeta_p^j.
    auto pf = prime_factors(q);
    if (pf.size() != 1) throw std::invalid_argument("paley_cgw: q must be a prime power");
    int base = static_cast<int>(pf[0]);
    int deg = 0;
    long long t = q;
    while (t > 1) {
        t /= base;
        ++deg;
    }
    FieldCtx F(base, deg);

    const int n = static_cast<int>(q) + 1;
    GwMatrix w(n, p);
    for (int j = 1; j < n; ++j) w.set(0, j, 0);
    for (int i = 1; i < n; ++i) w.set(i, 0, 0);

    // Circulant core in the element enumeration order 0, 1, ..., q-1 of the
    // field context: C[i][j] = phi(elt_j - elt_i).
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            uint32_t d = F.sub(static_cast<uint32_t>(j), static_cast<uint32_t>(i));
            if (d == 0) continue;
            w.set(i + 1, j + 1, static_cast<int16_t>(F.ind(d) % p));
        }
    }
    return checked(std::move(w), "paley_cgw");
}

GwMatrix berman_cgw(int p, int n, int t, int r, int d) {
    if (!is_prime(p)) throw std::invalid_argument("berman_cgw: p must be prime");
    if (n < 1 || t < 2) throw std::invalid_argument("berman_cgw: need n >= 1 and t >= 2");
    if (d <= 1 || r % d != 0) throw std::invalid_argument("berman_cgw: need d > 1 and d | r");

    FieldCtx F(p, n);
    const long long q0 = F.size();
    if ((q0 - 1) % r != 0) throw std::invalid_argument("berman_cgw: need r | p^n - 1");

    long long total = 1;
    for (int i = 0; i < t; ++i) {
        total *= q0;
        if ((total - 1) / r > 10000) throw std::invalid_argument("berman_cgw: order exceeds the desk-scale bound");
    }
    const long long m = (total - 1) / r;

    // lambda = prim^((q0-1)/r) has multiplicative order exactly r; orbits of
    // nonzero t-tuples under coordinatewise scaling all have size r.
    const long long step = (q0 - 1) / r;
    const uint32_t lambda = F.from_ind(step);

    auto scale_point = [&](const std::vector<uint32_t>& x) {
        std::vector<uint32_t> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = F.mul(lambda, x[i]);
        return y;
    };

    // Orbit representatives in lexicographic order of the least member.
    std::vector<std::vector<uint32_t>> reps;
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<uint32_t> cur(t, 0);
    for (long long code = 1; code < total; ++code) {
        // code -> tuple, coordinate 0 most significant so numeric order is
        // lexicographic order on (x_0, ..., x_{t-1}).
        if (seen[code]) continue;
        long long c = code;
        for (int i = t - 1; i >= 0; --i) {
            cur[i] = static_cast<uint32_t>(c % q0);
            c /= q0;
        }
        reps.push_back(cur);
        std::vector<uint32_t> y = cur;
        for (int j = 0; j < r; ++j) {
            long long yc = 0;
            for (int i = 0; i < t; ++i) yc = yc * q0 + y[i];
            seen[yc] = 1;
            y = scale_point(y);
        }
    }
    if (static_cast<long long>(reps.size()) != m) throw std::logic_error("berman_cgw: orbit count mismatch");

    // Row i = hyperplane class [u_i], column j = point class [x_j]; the same
    // orbit list indexes both. Incidence u.x in <lambda>, and the entry
    // exponent is the unique h with u (lambda^h x) = 1.
    GwMatrix w(static_cast<int>(m), d);
    for (long long i = 0; i < m; ++i) {
        for (long long j = 0; j < m; ++j) {
            uint32_t dot = 0;
            for (int c2 = 0; c2 < t; ++c2) dot = F.add(dot, F.mul(reps[i][c2], reps[j][c2]));
            if (dot == 0) continue;
            long long L = F.ind(F.inv(dot));
            if (L % step != 0) continue;  // u.x outside <lambda>: classes not incident
            long long h = (L / step) % r;
            w.set(static_cast<int>(i), static_cast<int>(j), static_cast<int16_t>(h % d));
        }
    }
    return checked(std::move(w), "berman_cgw");
}

std::pair<UkSeq, UkSeq> sw_sequences(long long q, long long tau_log) {
    if (q % 8 != 1) throw std::invalid_argument("sw_cgw: requires q = 1 mod 8");
    auto pf = prime_factors(q);
    if (pf.size() != 1) throw std::invalid_argument("sw_cgw: q must be a prime power");
    int p = static_cast<int>(pf[0]);
    int rdeg = 0;
    long long t = q;
    while (t > 1) {
        t /= p;
        ++rdeg;
    }
    if (q * q > (1 << 20)) throw std::invalid_argument("sw_cgw: q^2 exceeds the table bound");

    FieldCtx F(p, 2 * rdeg);  // GF(q^2)
    const long long qq = F.size();
    if (std::gcd(tau_log, qq - 1) != 1) throw std::invalid_argument("sw_sequences: tau must be primitive");
    const int nn = static_cast<int>((q + 1) / 2);

    auto tau_pow = [&](long long e) { return F.from_ind(tau_log * e); };
    const uint32_t gamma = tau_pow(nn);

    // Decompose x = alpha*gamma + beta over the order-q subfield using the
    // Frobenius: alpha = (x - x^q) / (gamma - gamma^q).
    const uint32_t denom = F.sub(gamma, F.pow(gamma, q));
    if (denom == 0) throw std::logic_error("sw_sequences: gamma lies in the subfield");
    auto decompose = [&](uint32_t x) {
        uint32_t alpha = F.mul(F.sub(x, F.pow(x, q)), F.inv(denom));
        uint32_t beta = F.sub(x, F.mul(alpha, gamma));
        return std::pair<uint32_t, uint32_t>{alpha, beta};
    };

    // chi(x) = zeta_8^ind(x) with ind relative to tau; on the subfield the
    // index is always even mod 8, so entries land in U_4.
    auto chi4 = [&](uint32_t x) -> int16_t {
        if (x == 0) return kZeroEntry;
        long long idx = F.ind(x);
        // ind relative to tau: tau^t = prim^(tau_log * t) => t = idx / tau_log mod qq-1
        long long inv = 0;
        // modular inverse of tau_log mod qq-1 (gcd is 1)
        {
            long long a = tau_log % (qq - 1), b = qq - 1, x0 = 1, x1 = 0;
            while (b) {
                long long qd = a / b;
                a -= qd * b;
                std::swap(a, b);
                x0 -= qd * x1;
                std::swap(x0, x1);
            }
            inv = ((x0 % (qq - 1)) + (qq - 1)) % (qq - 1);
        }
        long long e8 = (idx * inv) % 8;
        if (e8 % 2 != 0) throw std::logic_error("sw_sequences: odd character index on subfield element");
        return static_cast<int16_t>((e8 / 2) % 4);
    };

    UkSeq rs{4, {}}, ss{4, {}};
    rs.e.resize(nn);
    ss.e.resize(nn);
    for (int j = 0; j < nn; ++j) {
        auto [alpha, beta] = decompose(tau_pow(8LL * j));
        rs.e[j] = chi4(alpha);
        ss.e[j] = chi4(beta);
    }
    return {rs, ss};
}

GwMatrix sw_cgw(long long q) {
    auto [r, s] = sw_sequences(q, 1);
    const int nn = static_cast<int>(r.size());
    const int n = 2 * nn;
    GwMatrix w(n, 4);

    // Circulant block entry (i,j) = first_row[(j-i) mod nn]; the conjugate
    // transpose swaps indices and inverts, negation adds 2 (-1 = zeta_4^2).
    auto block = [&](int bi, int bj, const UkSeq& first, bool conj_transpose, bool negate) {
        for (int i = 0; i < nn; ++i) {
            for (int j = 0; j < nn; ++j) {
                int16_t e;
                if (!conj_transpose) {
                    e = first.e[((j - i) % nn + nn) % nn];
                } else {
                    e = first.e[((i - j) % nn + nn) % nn];
                    if (e >= 0) e = static_cast<int16_t>((4 - e) % 4);
                }
                if (e < 0) continue;
                if (negate) e = static_cast<int16_t>((e + 2) % 4);
                w.set(bi * nn + i, bj * nn + j, e);
            }
        }
    };

    block(0, 0, r, false, false);   // R
    block(0, 1, s, false, false);   // S
    block(1, 0, s, true, false);    // S*
    block(1, 1, r, true, true);     // -R*
    return checked(std::move(w), "sw_cgw");
}

bool is_wppgp(const UkSeq& a, const UkSeq& b, int alpha_exp) {
    if (a.k != b.k || a.size() != b.size()) throw std::invalid_argument("is_wppgp: mismatched sequences");
    const int v = static_cast<int>(a.size());
    for (int s = 1; s < v; ++s) {
        if (!(ppaf(a, alpha_exp, s) + ppaf(b, alpha_exp, s)).is_zero()) return false;
    }
    return true;
}

GwMatrix wppgp_to_cgw(const UkSeq& a, const UkSeq& b, int alpha_exp) {
    if (a.k != b.k || a.size() != b.size()) throw std::invalid_argument("wppgp_to_cgw: mismatched sequences");
    if (alpha_exp < 0 || alpha_exp >= a.k) throw std::invalid_argument("wppgp_to_cgw: alpha exponent out of range");
    if (!is_wppgp(a, b, alpha_exp)) throw std::invalid_argument("wppgp_to_cgw: pair is not complementary");

    const int v = static_cast<int>(a.size());
    const int k_in = a.k;
    const int K = (k_in % 2 == 0) ? k_in : 2 * k_in;
    const int f = K / k_in;  // odd k embeds by exponent doubling into U_2k
    const int half = K / 2;

    GwMatrix w(2 * v, K);
    // alpha-circulants: row i = first row * C_alpha^i, built by repeated
    // shifts (the wrapped entry picks up a factor alpha each pass).
    std::vector<std::vector<int>> A(v, std::vector<int>(v, -1)), B(v, std::vector<int>(v, -1));
    auto fill = [&](std::vector<std::vector<int>>& M, const UkSeq& first) {
        for (int j = 0; j < v; ++j)
            if (first.e[j] >= 0) M[0][j] = first.e[j] * f % K;
        for (int i = 1; i < v; ++i) {
            for (int j = 0; j < v; ++j) {
                int src = (j - 1 + v) % v;
                if (M[i - 1][src] < 0) {
                    M[i][j] = -1;
                    continue;
                }
                int e = M[i - 1][src];
                if (j == 0) e = (e + alpha_exp * f) % K;
                M[i][j] = e;
            }
        }
    };
    fill(A, a);
    fill(B, b);

    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            if (A[i][j] >= 0) w.set(i, j, static_cast<int16_t>(A[i][j]));                      // A
            if (B[i][j] >= 0) w.set(i, v + j, static_cast<int16_t>(B[i][j]));                  // B
            if (B[j][i] >= 0) w.set(v + i, j, static_cast<int16_t>((K - B[j][i] + half) % K)); // -B*
            if (A[j][i] >= 0) w.set(v + i, v + j, static_cast<int16_t>((K - A[j][i]) % K));    // A*
        }
    }
    return checked(std::move(w), "wppgp_to_cgw");
}

bool is_ternary_golay(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("is_ternary_golay: length mismatch");
    const int n = static_cast<int>(a.size());
    for (int x : a)
        if (x < -1 || x > 1) throw std::invalid_argument("is_ternary_golay: entries must be 0 or +-1");
    for (int x : b)
        if (x < -1 || x > 1) throw std::invalid_argument("is_ternary_golay: entries must be 0 or +-1");
    for (int s = 1; s < n; ++s) {
        long long acc = 0;
        for (int j = 0; j + s < n; ++j) acc += a[j] * a[j + s] + b[j] * b[j + s];
        if (acc != 0) return false;
    }
    return true;
}

UkSeq ternary_to_uk(const std::vector<int>& a, int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("ternary_to_uk: k must be even");
    UkSeq s{k, {}};
    s.e.reserve(a.size());
    for (int x : a) {
        if (x == 0)
            s.e.push_back(kZeroEntry);
        else if (x == 1)
            s.e.push_back(0);
        else if (x == -1)
            s.e.push_back(static_cast<int16_t>(k / 2));
        else
            throw std::invalid_argument("ternary_to_uk: entries must be 0 or +-1");
    }
    return s;
}

GwMatrix direct_sum(const GwMatrix& a, const GwMatrix& b) {
    VerifyReport ra = verify(a), rb = verify(b);
    if (!ra.ok || !rb.ok) throw std::invalid_argument("direct_sum: inputs must be CGWs");
    if (*ra.weight != *rb.weight) throw std::invalid_argument("direct_sum: weights must match");
    const int K = lcm_int(a.root_order(), b.root_order());
    GwMatrix ea = a.reencode(K), eb = b.reencode(K);
    GwMatrix m(a.order() + b.order(), K);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (!ea.is_zero_at(i, j)) m.set(i, j, ea.at(i, j));
    for (int i = 0; i < b.order(); ++i)
        for (int j = 0; j < b.order(); ++j)
            if (!eb.is_zero_at(i, j)) m.set(a.order() + i, a.order() + j, eb.at(i, j));
    return checked(std::move(m), "direct_sum");
}

GwMatrix border_pair(const GwMatrix& a, const GwMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("border_pair: orders must match");
    const int n = a.order();
    const int K = lcm_int(lcm_int(a.root_order(), b.root_order()), 2);
    GwMatrix ea = a.reencode(K), eb = b.reencode(K);

    // AB = BA must hold exactly over Z[zeta_K].
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            CycElt ab(K), ba(K);
            for (int c = 0; c < n; ++c) {
                if (!ea.is_zero_at(i, c) && !eb.is_zero_at(c, j))
                    ab = ab + CycElt::root(K, ea.at(i, c) + eb.at(c, j));
                if (!eb.is_zero_at(i, c) && !ea.is_zero_at(c, j))
                    ba = ba + CycElt::root(K, eb.at(i, c) + ea.at(c, j));
            }
            if (!(ab - ba).is_zero()) throw std::invalid_argument("border_pair: inputs do not commute");
        }
    }

    const int half = K / 2;
    GwMatrix m(2 * n, K);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!ea.is_zero_at(i, j)) m.set(i, j, ea.at(i, j));                                        // A
            if (!eb.is_zero_at(i, j)) m.set(i, n + j, eb.at(i, j));                                    // B
            if (!eb.is_zero_at(j, i)) m.set(n + i, j, static_cast<int16_t>((K - eb.at(j, i) + half) % K));  // -B*
            if (!ea.is_zero_at(j, i)) m.set(n + i, n + j, static_cast<int16_t>((K - ea.at(j, i)) % K));     // A*
        }
    }
    return checked(std::move(m), "border_pair");
}

GwMatrix kronecker(const GwMatrix& a, const GwMatrix& b) {
    const int K = lcm_int(a.root_order(), b.root_order());
    GwMatrix ea = a.reencode(K), eb = b.reencode(K);
    const int na = a.order(), nb = b.order();
    GwMatrix m(na * nb, K);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            if (ea.is_zero_at(i, j)) continue;
            int16_t e = ea.at(i, j);
            for (int u = 0; u < nb; ++u)
                for (int v = 0; v < nb; ++v)
                    if (!eb.is_zero_at(u, v))
                        m.set(i * nb + u, j * nb + v, static_cast<int16_t>((e + eb.at(u, v)) % K));
        }
    return checked(std::move(m), "kronecker");
}

GwMatrix dita(const GwMatrix& a, const std::vector<GwMatrix>& bs) {
    const int n = a.order();
    if (static_cast<int>(bs.size()) != n) throw std::invalid_argument("dita: need one block per column of A");
    const int mo = bs[0].order();
    int K = a.root_order();
    for (const auto& b : bs) {
        if (b.order() != mo) throw std::invalid_argument("dita: block orders must match");
        K = lcm_int(K, b.root_order());
    }
    VerifyReport rb0 = verify(bs[0]);
    if (!rb0.ok) throw std::invalid_argument("dita: blocks must be CGWs");
    for (const auto& b : bs) {
        VerifyReport rb = verify(b);
        if (!rb.ok || *rb.weight != *rb0.weight)
            throw std::invalid_argument("dita: blocks must be CGWs of equal weight");
    }

    GwMatrix ea = a.reencode(K);
    std::vector<GwMatrix> ebs;
    ebs.reserve(bs.size());
    for (const auto& b : bs) ebs.push_back(b.reencode(K));

    GwMatrix m(n * mo, K);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ea.is_zero_at(i, j)) continue;
            int16_t e = ea.at(i, j);
            for (int u = 0; u < mo; ++u)
                for (int v = 0; v < mo; ++v)
                    if (!ebs[j].is_zero_at(u, v))
                        m.set(i * mo + u, j * mo + v, static_cast<int16_t>((e + ebs[j].at(u, v)) % K));
        }
    return checked(std::move(m), "dita");
}

GwMatrix weave(const std::vector<std::vector<int>>& mask, const std::vector<GwMatrix>& as,
               const std::vector<GwMatrix>& bs) {
    const int mrows = static_cast<int>(mask.size());
    if (mrows == 0) throw std::invalid_argument("weave: empty mask");
    const int mcols = static_cast<int>(mask[0].size());
    for (const auto& row : mask) {
        if (static_cast<int>(row.size()) != mcols) throw std::invalid_argument("weave: ragged mask");
        for (int x : row)
            if (x != 0 && x != 1) throw std::invalid_argument("weave: mask entries must be 0/1");
    }
    if (static_cast<int>(as.size()) != mrows || static_cast<int>(bs.size()) != mcols)
        throw std::invalid_argument("weave: need one A per mask row and one B per mask column");

    std::vector<int> rsum(mrows, 0), csum(mcols, 0);
    for (int i = 0; i < mrows; ++i)
        for (int j = 0; j < mcols; ++j) {
            rsum[i] += mask[i][j];
            csum[j] += mask[i][j];
        }
    long long sigma_r = 0, sigma_c = 0;
    for (int x : rsum) sigma_r += x;
    for (int x : csum) sigma_c += x;
    if (sigma_r != sigma_c) throw std::invalid_argument("weave: row and column sums disagree");

    int K = 1, wa = -1, wb = -1;
    for (int i = 0; i < mrows; ++i) {
        VerifyReport rep = verify(as[i]);
        if (!rep.ok || as[i].order() != rsum[i]) throw std::invalid_argument("weave: A_" + std::to_string(i) + " must be a CGW of order rowsum");
        if (wa < 0) wa = *rep.weight;
        if (*rep.weight != wa) throw std::invalid_argument("weave: A blocks must share one weight");
        K = lcm_int(K, as[i].root_order());
    }
    for (int j = 0; j < mcols; ++j) {
        VerifyReport rep = verify(bs[j]);
        if (!rep.ok || bs[j].order() != csum[j]) throw std::invalid_argument("weave: B_" + std::to_string(j) + " must be a CGW of order colsum");
        if (wb < 0) wb = *rep.weight;
        if (*rep.weight != wb) throw std::invalid_argument("weave: B blocks must share one weight");
        K = lcm_int(K, bs[j].root_order());
    }

    std::vector<GwMatrix> ea, eb;
    for (const auto& x : as) ea.push_back(x.reencode(K));
    for (const auto& x : bs) eb.push_back(x.reencode(K));

    std::vector<int> row_off(mrows, 0), col_off(mcols, 0);
    for (int i = 1; i < mrows; ++i) row_off[i] = row_off[i - 1] + rsum[i - 1];
    for (int j = 1; j < mcols; ++j) col_off[j] = col_off[j - 1] + csum[j - 1];

    GwMatrix w(static_cast<int>(sigma_r), K);
    std::vector<int> col_seen(mcols, 0);
    for (int i = 0; i < mrows; ++i) {
        int p = 0;  // index of the nonzero within row i
        for (int j = 0; j < mcols; ++j) {
            if (!mask[i][j]) continue;
            int q = col_seen[j]++;  // index of the nonzero within column j
            // Rank-one block: column p of A_i times row q of B_j.
            for (int u = 0; u < rsum[i]; ++u) {
                if (ea[i].is_zero_at(u, p)) continue;
                int16_t x = ea[i].at(u, p);
                for (int v = 0; v < csum[j]; ++v) {
                    if (eb[j].is_zero_at(q, v)) continue;
                    w.set(row_off[i] + u, col_off[j] + v,
                          static_cast<int16_t>((x + eb[j].at(q, v)) % K));
                }
            }
            ++p;
        }
    }
    return checked(std::move(w), "weave");
}

long long Recipe::get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("recipe " + name + ": missing parameter " + key);
    return it->second;
}

std::string Recipe::to_string() const {
    std::ostringstream os;
    os << name << "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    os << ")";
    return os.str();
}

Recipe parse_recipe(const std::string& text) {
    auto lp = text.find('(');
    if (lp == std::string::npos || text.back() != ')')
        throw std::invalid_argument("recipe: expected name(key=value,...)");
    Recipe r;
    r.name = text.substr(0, lp);
    if (r.name.empty()) throw std::invalid_argument("recipe: empty name");
    std::string body = text.substr(lp + 1, text.size() - lp - 2);
    if (body.empty()) return r;
    std::istringstream bs(body);
    std::string item;
    while (std::getline(bs, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("recipe: expected key=value in '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            long long v = std::stoll(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            if (!r.params.emplace(key, v).second) throw std::invalid_argument("recipe: duplicate key " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("recipe: bad integer value '" + val + "'");
        }
    }
    return r;
}

std::string data_dir() {
    if (const char* env = std::getenv("CGW_DATA")) return env;
#ifdef CGW_DATA_DIR
    return CGW_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<WppgpPair> load_wppgp_pairs(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open pair library: " + path);
    std::vector<WppgpPair> out;
    std::string line;
    int lineno = 0;
    auto parse_seq = [](const std::string& s, int k) {
        UkSeq r{k, {}};
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ':')) {
            if (tok == ".")
                r.e.push_back(kZeroEntry);
            else {
                int e = std::stoi(tok);
                if (e < 0 || e >= k) throw std::runtime_error("pair library: exponent out of range");
                r.e.push_back(static_cast<int16_t>(e));
            }
        }
        return r;
    };
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        WppgpPair p;
        std::string sa, sb;
        if (!(is >> p.id >> p.k >> p.alpha_exp >> sa >> sb))
            throw std::runtime_error("pair library: malformed line " + std::to_string(lineno));
        std::string rest;
        std::getline(is, rest);
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        p.note = rest;
        p.a = parse_seq(sa, p.k);
        p.b = parse_seq(sb, p.k);
        if (p.a.size() != p.b.size()) throw std::runtime_error("pair library: length mismatch at id " + std::to_string(p.id));
        out.push_back(std::move(p));
    }
    return out;
}

const std::vector<WppgpPair>& bundled_wppgp_pairs() {
    static std::vector<WppgpPair> pairs = load_wppgp_pairs(data_dir() + "/wppgp_pairs.txt");
    return pairs;
}

GwMatrix build_recipe(const Recipe& r) {
    if (r.name == "identity") return GwMatrix::identity(static_cast<int>(r.get("n")));
    if (r.name == "fourier") return fourier(static_cast<int>(r.get("k")));
    if (r.name == "paley") return paley_cgw(r.get("q"), static_cast<int>(r.get("p")));
    if (r.name == "berman")
        return berman_cgw(static_cast<int>(r.get("p")), static_cast<int>(r.get("n")),
                          static_cast<int>(r.get("t")), static_cast<int>(r.get("r")),
                          static_cast<int>(r.get("d")));
    if (r.name == "sw") return sw_cgw(r.get("q"));
    if (r.name == "wppgp") {
        long long id = r.get("pair");
        for (const auto& p : bundled_wppgp_pairs())
            if (p.id == id) return wppgp_to_cgw(p.a, p.b, p.alpha_exp);
        throw std::invalid_argument("recipe wppgp: no bundled pair with id " + std::to_string(id));
    }
    throw std::invalid_argument("unknown recipe name: " + r.name);
}

}  // namespace cgw
