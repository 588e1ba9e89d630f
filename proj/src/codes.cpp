#include "cgw/codes.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cgw {

namespace {

// Reduced row echelon form with deterministic pivoting: leftmost pivot
// column, least row index. Returns the nonzero rows.
std::vector<std::vector<uint32_t>> rref_of(const FieldCtx& F, std::vector<std::vector<uint32_t>> rows, int n) {
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        uint32_t inv = F.inv(rows[r][c]);
        for (int j = 0; j < n; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            uint32_t f = rows[i][c];
            for (int j = 0; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

LinearCode::LinearCode(std::shared_ptr<const FieldCtx> ctx, int n, std::vector<std::vector<uint32_t>> gen)
    : ctx_(std::move(ctx)), n_(n), gen_(std::move(gen)) {
    if (n_ < 1) throw std::invalid_argument("LinearCode: length must be positive");
    for (const auto& row : gen_) {
        if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("LinearCode: generator row length mismatch");
        for (uint32_t x : row)
            if (x >= ctx_->size()) throw std::invalid_argument("LinearCode: element index out of range");
    }
    rref_ = rref_of(*ctx_, gen_, n_);
    dim_ = static_cast<int>(rref_.size());
}

bool LinearCode::contains(const std::vector<uint32_t>& word) const {
    if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("LinearCode::contains: length mismatch");
    // Reduce against the cached RREF.
    std::vector<uint32_t> v = word;
    const FieldCtx& F = *ctx_;
    for (const auto& row : rref_) {
        int pc = 0;
        while (pc < n_ && row[pc] == 0) ++pc;
        if (pc == n_) continue;
        if (v[pc] == 0) continue;
        uint32_t f = v[pc];
        for (int j = pc; j < n_; ++j) v[j] = F.sub(v[j], F.mul(f, row[j]));
    }
    for (uint32_t x : v)
        if (x != 0) return false;
    return true;
}

LinearCode cgw_to_code(const GwMatrix& w, std::shared_ptr<const FieldCtx> ctx) {
    const FieldCtx& F = *ctx;
    if (F.degree() % 2 != 0) throw std::invalid_argument("cgw_to_code: field must be of square order q^2");
    const uint32_t q = F.subfield_order();
    if (w.root_order() != static_cast<int>(q) + 1)
        throw std::invalid_argument("cgw_to_code: requires W.k = q + 1");
    // alpha = prim^(q-1) has multiplicative order q + 1.
    const int n = w.order();
    std::vector<std::vector<uint32_t>> gen(n, std::vector<uint32_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!w.is_zero_at(i, j))
                gen[i][j] = F.from_ind(static_cast<long long>(q - 1) * w.at(i, j));
    return LinearCode(std::move(ctx), n, std::move(gen));
}

bool is_hso(const LinearCode& c) {
    const FieldCtx& F = c.field();
    const uint32_t q = F.subfield_order();
    const auto& G = c.gen();
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i; j < G.size(); ++j) {
            uint32_t acc = 0;
            for (int t = 0; t < c.length(); ++t) acc = F.add(acc, F.mul(G[i][t], F.pow(G[j][t], q)));
            if (acc != 0) return false;
        }
    }
    return true;
}

LinearCode hermitian_dual(const LinearCode& c) {
    const FieldCtx& F = c.field();
    const uint32_t q = F.subfield_order();
    const int n = c.length();

    // x in C^H iff (G^(q)) x^T = 0; solve from the RREF of G^(q).
    std::vector<std::vector<uint32_t>> gq = c.gen();
    for (auto& row : gq)
        for (auto& x : row) x = F.pow(x, q);
    std::vector<std::vector<uint32_t>> R = rref_of(F, std::move(gq), n);

    std::vector<int> pivot_col(R.size());
    std::vector<char> is_pivot(n, 0);
    for (std::size_t i = 0; i < R.size(); ++i) {
        int pc = 0;
        while (pc < n && R[i][pc] == 0) ++pc;
        pivot_col[i] = pc;
        is_pivot[pc] = 1;
    }

    std::vector<std::vector<uint32_t>> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(n, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < R.size(); ++i) v[pivot_col[i]] = F.neg(R[i][fc]);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) basis.push_back(std::vector<uint32_t>(n, 0));  // the zero code
    return LinearCode(c.field_ptr(), n, std::move(basis));
}

namespace {

// Strategy A: scan projective messages against the RREF basis; message
// digits are field-element indices, so each odometer step adds a
// precomputed (element difference) * row to the running codeword.
MinDistResult strategy_a(const LinearCode& c, unsigned long long budget, int threads) {
    const FieldCtx& F = c.field();
    const int n = c.length();
    const int kdim = c.dim();
    const uint32_t Q = F.size();
    const auto& B = c.rref();

    MinDistResult res;
    res.strategy = 'A';

    unsigned long long total = 0;
    {
        unsigned long long pw = 1;
        for (int i = 0; i < kdim; ++i) {
            pw *= Q;
            if (pw > 100ULL * budget) break;
        }
        total = (pw - 1) / (Q - 1);
    }
    if (total > budget) return res;  // caller falls back

    // step_delta[v] = elt(v+1) - elt(v); wrap_delta = elt(0) - elt(Q-1).
    std::vector<uint32_t> step_delta(Q - 1);
    for (uint32_t v = 0; v + 1 < Q; ++v) step_delta[v] = F.sub(v + 1, v);
    const uint32_t wrap_delta = F.neg(Q - 1);

    // scaled[r][s] = s * B[r], so odometer steps are pure row additions.
    std::vector<std::vector<std::vector<uint32_t>>> scaled(kdim);
    for (int r = 0; r < kdim; ++r) {
        scaled[r].assign(Q, std::vector<uint32_t>(n));
        for (uint32_t s = 0; s < Q; ++s)
            for (int j = 0; j < n; ++j) scaled[r][s][j] = F.mul(s, B[r][j]);
    }

    std::atomic<int> best{n + 1};

    // One work item: messages with first nonzero coordinate t (coefficient
    // 1) and, when there are free digits, a fixed most significant digit.
    auto scan_item = [&](int t, int ms_value) {
        const int free_digits = kdim - t - 1;
        std::vector<uint32_t> cw(B[t].begin(), B[t].end());
        int local_best = n + 1;
        auto weigh = [&] {
            int w = 0;
            for (int j = 0; j < n; ++j)
                if (cw[j] != 0) ++w;
            if (w < local_best) local_best = w;
        };
        if (free_digits == 0) {
            weigh();
        } else {
            if (ms_value > 0) {
                const auto& add = scaled[kdim - 1][static_cast<uint32_t>(ms_value)];
                for (int j = 0; j < n; ++j) cw[j] = F.add(cw[j], add[j]);
            }
            const int iter_digits = free_digits - 1;  // most significant digit is pinned
            std::vector<uint32_t> digit(iter_digits, 0);
            weigh();
            for (;;) {
                int pos = 0;
                while (pos < iter_digits && digit[pos] + 1 == Q) {
                    const auto& add = scaled[t + 1 + pos][wrap_delta];
                    for (int j = 0; j < n; ++j) cw[j] = F.add(cw[j], add[j]);
                    digit[pos] = 0;
                    ++pos;
                }
                if (pos == iter_digits) break;
                const auto& add = scaled[t + 1 + pos][step_delta[digit[pos]]];
                ++digit[pos];
                int w = 0;
                for (int j = 0; j < n; ++j) {
                    cw[j] = F.add(cw[j], add[j]);
                    w += cw[j] != 0;
                }
                if (w < local_best) local_best = w;
            }
        }
        int cur = best.load();
        while (local_best < cur && !best.compare_exchange_weak(cur, local_best)) {
        }
    };

    std::vector<std::pair<int, int>> items;
    for (int t = 0; t < kdim; ++t) {
        if (t == kdim - 1)
            items.push_back({t, 0});
        else
            for (uint32_t s = 0; s < Q; ++s) items.push_back({t, static_cast<int>(s)});
    }

    if (threads <= 1) {
        for (auto [t, s] : items) scan_item(t, s);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                scan_item(items[i].first, items[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    res.exact = true;
    res.distance = best.load();
    res.evaluations = total;
    return res;
}

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Strategy B: ascending candidate weight, enumerate supports and scalings
// with the first nonzero entry fixed to 1, test membership via the parity
// conditions of the RREF (positions reduce to zero).
MinDistResult strategy_b(const LinearCode& c, unsigned long long budget) {
    const FieldCtx& F = c.field();
    const int n = c.length();
    const uint32_t Q = F.size();

    MinDistResult res;
    res.strategy = 'B';
    unsigned long long used = 0;

    for (int d = 1; d <= n; ++d) {
        unsigned long long level = binom(n, d);
        for (int i = 1; i < d; ++i) {
            level *= (Q - 1);
            if (level > budget) break;
        }
        if (used + level > budget) return res;  // inexact: ran out before confirming d

        std::vector<int> supp(d);
        for (int i = 0; i < d; ++i) supp[i] = i;
        std::vector<uint32_t> word(n, 0);
        for (;;) {
            // scalings: first support position fixed to 1
            std::vector<uint32_t> scale(d, 1);
            for (;;) {
                ++used;
                std::fill(word.begin(), word.end(), 0);
                for (int i = 0; i < d; ++i) word[supp[i]] = scale[i];
                if (c.contains(word)) {
                    res.exact = true;
                    res.distance = d;
                    res.evaluations = used;
                    return res;
                }
                int pos = d - 1;
                while (pos >= 1) {
                    uint32_t nxt = scale[pos] + 1;
                    // skip 0: nonzero scalings only
                    if (nxt == Q) {
                        scale[pos] = 1;
                        --pos;
                    } else {
                        scale[pos] = nxt;
                        break;
                    }
                }
                if (pos < 1) break;
            }
            int i = d - 1;
            while (i >= 0 && supp[i] == n - d + i) --i;
            if (i < 0) break;
            ++supp[i];
            for (int j = i + 1; j < d; ++j) supp[j] = supp[j - 1] + 1;
        }
    }
    res.evaluations = used;
    return res;  // dim >= 1 always yields a codeword, so this is unreachable
}

}  // namespace

MinDistResult min_distance(const LinearCode& c, unsigned long long budget, int threads) {
    if (c.dim() < 1) throw std::invalid_argument("min_distance: zero-dimensional code");

    // Cost of A is known upfront; B's cost depends on the unknown distance.
    const uint32_t Q = c.field().size();
    unsigned long long cost_a = 0;
    {
        unsigned long long pw = 1;
        bool over = false;
        for (int i = 0; i < c.dim(); ++i) {
            if (pw > 20ULL * budget) {
                over = true;
                break;
            }
            pw *= Q;
        }
        cost_a = over ? ~0ULL : (pw - 1) / (Q - 1);
    }
    if (cost_a <= budget) {
        MinDistResult a = strategy_a(c, budget, threads);
        if (a.exact) return a;
    }
    MinDistResult b = strategy_b(c, budget);
    return b;  // may be inexact: budget exceeded
}

std::string serialize_code(const LinearCode& c) {
    std::ostringstream os;
    os << "CODE q2=" << c.field().size() << " n=" << c.length() << " rows=" << c.gen().size() << "\n";
    for (const auto& row : c.gen()) {
        for (int j = 0; j < c.length(); ++j) {
            if (j) os << " ";
            os << row[j];
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::shared_ptr<const FieldCtx> field_of_order(uint32_t q2) {
    for (int p = 2; p <= static_cast<int>(q2); ++p) {
        if (!is_prime(p)) continue;
        uint32_t t = q2;
        int m = 0;
        while (t % p == 0) {
            t /= p;
            ++m;
        }
        if (t == 1) return std::make_shared<FieldCtx>(p, m);
        if (q2 % p == 0) break;
    }
    throw std::invalid_argument("code file: field size is not a prime power");
}

}  // namespace

LinearCode parse_code_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    std::istringstream hs(line);
    std::string tag, f1, f2, f3;
    hs >> tag >> f1 >> f2 >> f3;
    if (tag != "CODE") throw std::runtime_error("code file: malformed header");
    auto val = [](const std::string& s, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (s.rfind(prefix, 0) != 0) throw std::runtime_error("code file: expected " + prefix);
        return std::stoul(s.substr(prefix.size()));
    };
    uint32_t q2 = static_cast<uint32_t>(val(f1, "q2"));
    int n = static_cast<int>(val(f2, "n"));
    int rows = static_cast<int>(val(f3, "rows"));
    auto ctx = field_of_order(q2);
    std::vector<std::vector<uint32_t>> gen(rows, std::vector<uint32_t>(n, 0));
    for (int i = 0; i < rows; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("code file: missing rows");
        std::istringstream rs(line);
        for (int j = 0; j < n; ++j)
            if (!(rs >> gen[i][j])) throw std::runtime_error("code file: short row");
    }
    return LinearCode(std::move(ctx), n, std::move(gen));
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open code file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_code_text(ss.str());
}

std::vector<unsigned long long> weight_distribution(const LinearCode& c, unsigned long long budget) {
    const FieldCtx& F = c.field();
    const int n = c.length();
    const int kdim = c.dim();
    const uint32_t Q = F.size();
    const auto& B = c.rref();

    unsigned long long total = 1;
    for (int i = 0; i < kdim; ++i) {
        total *= Q;
        if (total > budget) throw std::invalid_argument("weight_distribution: over budget");
    }

    std::vector<uint32_t> step_delta(Q - 1);
    for (uint32_t v = 0; v + 1 < Q; ++v) step_delta[v] = F.sub(v + 1, v);
    const uint32_t wrap_delta = F.neg(Q - 1);

    std::vector<unsigned long long> dist(n + 1, 0);
    dist[0] = 1;  // zero codeword
    // Full projective scan; each class counts for its (Q - 1) scalings.
    for (int t = 0; t < kdim; ++t) {
        std::vector<uint32_t> cw(B[t].begin(), B[t].end());
        const int free_digits = kdim - t - 1;
        std::vector<uint32_t> digit(free_digits, 0);
        auto weigh = [&] {
            int w = 0;
            for (int j = 0; j < n; ++j)
                if (cw[j] != 0) ++w;
            dist[w] += Q - 1;
        };
        weigh();
        if (free_digits > 0) {
            for (;;) {
                int pos = 0;
                while (pos < free_digits && digit[pos] + 1 == Q) {
                    for (int j = 0; j < n; ++j) cw[j] = F.add(cw[j], F.mul(wrap_delta, B[t + 1 + pos][j]));
                    digit[pos] = 0;
                    ++pos;
                }
                if (pos == free_digits) break;
                uint32_t delta = step_delta[digit[pos]];
                ++digit[pos];
                for (int j = 0; j < n; ++j) cw[j] = F.add(cw[j], F.mul(delta, B[t + 1 + pos][j]));
                weigh();
            }
        }
    }
    return dist;
}

}  // namespace cgw
