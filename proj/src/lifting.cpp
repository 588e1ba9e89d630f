#include "cgw/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cgw/cyclotomic.hpp"

namespace cgw {

namespace {

struct KStructure {
    int k;
    enum class Kind { Prime, PrimePower, TwoP, General } kind;
    long long p = 0;   // base prime (Prime, PrimePower, TwoP: the odd prime)
    int fiber = 0;     // k/p for prime powers
};

KStructure analyze_k(int k) {
    KStructure s;
    s.k = k;
    auto pf = prime_factors(k);
    if (pf.size() == 1) {
        s.p = pf[0];
        s.kind = (k == pf[0]) ? KStructure::Kind::Prime : KStructure::Kind::PrimePower;
        s.fiber = static_cast<int>(k / pf[0]);
    } else if (pf.size() == 2 && pf[0] == 2 && k == 2 * pf[1]) {
        s.kind = KStructure::Kind::TwoP;
        s.p = pf[1];
    } else {
        s.kind = KStructure::Kind::General;
    }
    return s;
}

bool feasible_with(const KStructure& ks, const std::vector<long long>& c, long long m) {
    const int k = ks.k;
    switch (ks.kind) {
        case KStructure::Kind::Prime: {
            // All coefficients must end up equal.
            long long sum = 0, mx = 0;
            for (long long x : c) {
                sum += x;
                mx = std::max(mx, x);
            }
            long long total = sum + m;
            return total % k == 0 && mx * k <= total;
        }
        case KStructure::Kind::PrimePower: {
            // Coefficients must become constant on each coset mod k/p.
            const long long p = ks.p;
            const int fiber = ks.fiber;
            long long minfill = 0;
            for (int r = 0; r < fiber; ++r) {
                long long mx = 0, sum = 0;
                for (int j = r; j < k; j += fiber) {
                    mx = std::max(mx, c[j]);
                    sum += c[j];
                }
                minfill += mx * p - sum;
            }
            return m >= minfill && (m - minfill) % p == 0;
        }
        case KStructure::Kind::TwoP: {
            // Net signed weights per class mod p must become equal; each new
            // term moves one class by +-1.
            const long long p = ks.p;
            std::vector<long long> v(static_cast<std::size_t>(p), 0);
            for (int j = 0; j < k; ++j) {
                if (j % 2 == 0)
                    v[(j / 2) % p] += c[j];
                else
                    v[((j + p) / 2) % p] -= c[j];  // j odd: zeta_2p^j = -zeta_p^((j+p)/2)
            }
            long long lo = *std::min_element(v.begin(), v.end());
            long long hi = *std::max_element(v.begin(), v.end());
            for (long long T = lo - 1; T <= hi + 1; ++T) {
                long long steps = 0;
                for (long long x : v) steps += std::llabs(x - T);
                if (steps <= m && (m - steps) % 2 == 0) return true;
            }
            return false;
        }
        case KStructure::Kind::General: {
            // Sound necessary condition only: the total term count must be a
            // Lam-Leung feasible sum.
            long long sum = m;
            for (long long x : c) sum += x;
            return lam_leung_feasible(sum, k);
        }
    }
    return true;
}

// Search state shared by the serial and prefix-parallel paths.
struct Searcher {
    int n, k, w;
    KStructure ks;
    std::vector<std::pair<int, int>> cells;  // row-major nonzero cells
    std::vector<int> cell_at;                // (r,c) -> cell index, -1 for zeros
    std::vector<int> fixed;                  // -1 free, else forced exponent
    // pair state, indexed pair_index(r1,r2) with r1 < r2
    std::vector<std::vector<long long>> coeffs;
    std::vector<long long> remaining;
    std::vector<int16_t> assign;  // per cell
    const GwMatrix* support;

    std::atomic<unsigned long long>* nodes;
    unsigned long long budget;
    std::atomic<bool>* stop;

    int pair_index(int a, int b) const { return a * n + b; }

    void init(const GwMatrix& s, int kk, bool normalize) {
        support = &s;
        n = s.order();
        k = kk;
        ks = analyze_k(kk);
        cell_at.assign(static_cast<std::size_t>(n) * n, -1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!s.is_zero_at(i, j)) {
                    cell_at[static_cast<std::size_t>(i) * n + j] = static_cast<int>(cells.size());
                    cells.push_back({i, j});
                }
        w = s.row_weight(0);
        fixed.assign(cells.size(), -1);
        if (normalize) {
            // Columns scaled so row 0 is all exponent 0; rows scaled so each
            // row's first nonzero is exponent 0. Loses no solutions under
            // monomial equivalence.
            std::vector<char> row_seen(n, 0);
            for (std::size_t idx = 0; idx < cells.size(); ++idx) {
                auto [r, c] = cells[idx];
                if (r == 0) fixed[idx] = 0;
                else if (!row_seen[r]) {
                    fixed[idx] = 0;
                    row_seen[r] = 1;
                }
            }
        }
        coeffs.assign(static_cast<std::size_t>(n) * n, {});
        remaining.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int ov = 0;
                for (int c = 0; c < n; ++c)
                    if (!s.is_zero_at(a, c) && !s.is_zero_at(b, c)) ++ov;
                coeffs[pair_index(a, b)].assign(k, 0);
                remaining[pair_index(a, b)] = ov;
            }
        assign.assign(cells.size(), -1);
    }

    // Applies cell idx := e; returns false if some affected pair becomes
    // infeasible (state persists; caller must undo either way).
    bool apply(std::size_t idx, int16_t e) {
        auto [r, c] = cells[idx];
        assign[idx] = e;
        bool ok = true;
        for (int a = 0; a < r; ++a) {
            if (support->is_zero_at(a, c)) continue;
            int ea = entry(a, c);
            int t = ((ea - e) % k + k) % k;
            auto& cf = coeffs[pair_index(a, r)];
            cf[t] += 1;
            long long& m = remaining[pair_index(a, r)];
            m -= 1;
            if (ok) {
                if (m == 0) {
                    if (!CycElt::from_coeffs(k, cf).is_zero()) ok = false;
                } else if (!feasible_with(ks, cf, m)) {
                    ok = false;
                }
            }
        }
        return ok;
    }

    void undo(std::size_t idx) {
        auto [r, c] = cells[idx];
        int16_t e = assign[idx];
        for (int a = 0; a < r; ++a) {
            if (support->is_zero_at(a, c)) continue;
            int ea = entry(a, c);
            int t = ((ea - e) % k + k) % k;
            coeffs[pair_index(a, r)][t] -= 1;
            remaining[pair_index(a, r)] += 1;
        }
        assign[idx] = -1;
    }

    int entry(int r, int c) const {
        // Only called for already-assigned cells in fully processed rows.
        return assign[cell_at[static_cast<std::size_t>(r) * n + c]];
    }

    // DFS from cell `idx`; returns true when a full assignment was found.
    bool dfs(std::size_t idx) {
        if (stop->load(std::memory_order_relaxed)) return false;
        if (idx == cells.size()) return true;
        int lo = fixed[idx] >= 0 ? fixed[idx] : 0;
        int hi = fixed[idx] >= 0 ? fixed[idx] : k - 1;
        for (int e = lo; e <= hi; ++e) {
            unsigned long long seen = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (seen > budget) {
                stop->store(true, std::memory_order_relaxed);
                return false;
            }
            bool ok = apply(idx, static_cast<int16_t>(e));
            if (ok && dfs(idx + 1)) return true;
            undo(idx);
            if (stop->load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    GwMatrix to_matrix() const {
        GwMatrix m(n, k);
        for (std::size_t idx = 0; idx < cells.size(); ++idx)
            m.set(cells[idx].first, cells[idx].second, assign[idx]);
        return m;
    }
};

}  // namespace

bool completion_feasible(const std::vector<long long>& coeffs, long long remaining, int k) {
    if (static_cast<int>(coeffs.size()) != k) throw std::invalid_argument("completion_feasible: coefficient length");
    if (remaining == 0) return CycElt::from_coeffs(k, coeffs).is_zero();
    return feasible_with(analyze_k(k), coeffs, remaining);
}

LiftResult lift(const LiftInstance& inst, const LiftOptions& opts) {
    const GwMatrix& s = inst.support;
    if (s.root_order() != 1) throw std::invalid_argument("lift: support must be over U_1");
    if (inst.k < 1) throw std::invalid_argument("lift: root order must be positive");

    LiftResult res;

    // A lift must be a CGW, so irregular supports refute immediately.
    const int w = s.row_weight(0);
    for (int i = 0; i < s.order(); ++i)
        if (s.row_weight(i) != w) return res;
    for (int j = 0; j < s.order(); ++j)
        if (s.col_weight(j) != w) return res;

    // Overlap pre-check: every pairwise support intersection must admit a
    // vanishing sum at all.
    for (int a = 0; a < s.order(); ++a)
        for (int b = a + 1; b < s.order(); ++b) {
            int ov = 0;
            for (int c = 0; c < s.order(); ++c)
                if (!s.is_zero_at(a, c) && !s.is_zero_at(b, c)) ++ov;
            if (!lam_leung_feasible(ov, inst.k)) return res;
        }

    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> stop{false};

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        Searcher se;
        se.init(s, inst.k, opts.normalize);
        se.nodes = &nodes;
        se.budget = opts.budget;
        se.stop = &stop;
        bool found = se.dfs(0);
        res.nodes = nodes.load();
        if (found) {
            res.status = LiftStatus::Lifted;
            res.witness = se.to_matrix();
        } else if (stop.load()) {
            res.status = LiftStatus::BudgetExceeded;
        } else {
            res.status = LiftStatus::NoLift;
        }
        return res;
    }

    // Parallel: enumerate feasible prefixes over the first few free cells,
    // then search subtrees in lexicographic order. The reported witness is
    // the lexicographically first one, independent of the thread count.
    Searcher proto;
    proto.init(s, inst.k, opts.normalize);
    std::size_t depth = 0;
    std::size_t combos = 1;
    while (depth < proto.cells.size() && combos < static_cast<std::size_t>(threads) * 8) {
        if (proto.fixed[depth] < 0) combos *= inst.k;
        ++depth;
    }

    std::vector<std::vector<int16_t>> prefixes;
    {
        Searcher se = proto;
        se.nodes = &nodes;
        se.budget = opts.budget;
        se.stop = &stop;
        std::vector<int16_t> cur;
        std::function<void(std::size_t)> gen = [&](std::size_t idx) {
            if (idx == depth) {
                prefixes.emplace_back(se.assign.begin(), se.assign.begin() + depth);
                return;
            }
            int lo = se.fixed[idx] >= 0 ? se.fixed[idx] : 0;
            int hi = se.fixed[idx] >= 0 ? se.fixed[idx] : inst.k - 1;
            for (int e = lo; e <= hi; ++e) {
                nodes.fetch_add(1, std::memory_order_relaxed);
                if (se.apply(idx, static_cast<int16_t>(e))) gen(idx + 1);
                se.undo(idx);
            }
        };
        gen(0);
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_found{prefixes.size()};
    std::mutex best_mu;
    std::optional<GwMatrix> best_witness;

    auto worker = [&] {
        for (;;) {
            std::size_t mine = next.fetch_add(1);
            if (mine >= prefixes.size()) return;
            if (mine >= best_found.load()) continue;  // a lexicographically earlier witness exists
            if (stop.load()) return;
            Searcher se = proto;
            se.nodes = &nodes;
            se.budget = opts.budget;
            se.stop = &stop;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) ok = se.apply(i, prefixes[mine][i]);
            if (ok && se.dfs(depth)) {
                std::lock_guard<std::mutex> lk(best_mu);
                std::size_t cur = best_found.load();
                if (mine < cur) {
                    best_found.store(mine);
                    best_witness = se.to_matrix();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    res.nodes = nodes.load();
    if (best_witness) {
        res.status = LiftStatus::Lifted;
        res.witness = std::move(best_witness);
    } else if (stop.load()) {
        res.status = LiftStatus::BudgetExceeded;
    } else {
        res.status = LiftStatus::NoLift;
    }
    return res;
}

LiftResult brute_lift_oracle(const LiftInstance& inst) {
    const GwMatrix& s = inst.support;
    if (s.root_order() != 1) throw std::invalid_argument("brute_lift_oracle: support must be over U_1");
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < s.order(); ++i)
        for (int j = 0; j < s.order(); ++j)
            if (!s.is_zero_at(i, j)) ones.push_back({i, j});
    if (ones.size() > 12) throw std::invalid_argument("brute_lift_oracle: more than 12 nonzero cells");

    LiftResult res;
    const int k = inst.k;
    std::vector<int> digits(ones.size(), 0);
    for (;;) {
        ++res.nodes;
        GwMatrix m(s.order(), k);
        for (std::size_t i = 0; i < ones.size(); ++i)
            m.set(ones[i].first, ones[i].second, static_cast<int16_t>(digits[i]));
        if (verify(m).ok) {
            res.status = LiftStatus::Lifted;
            res.witness = std::move(m);
            return res;
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == k) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    res.status = LiftStatus::NoLift;
    return res;
}

CellResult lift_cell(int n, int w, int k, unsigned long long budget) {
    if (!(n >= w && w >= 1 && k >= 2)) throw std::invalid_argument("lift_cell: need n >= w >= 1 and k >= 2");
    CellResult out;

    // Feasible pairwise overlap counts for this k.
    std::vector<char> ov_ok(static_cast<std::size_t>(w) + 1, 0);
    for (int ov = 0; ov <= w; ++ov) ov_ok[ov] = lam_leung_feasible(ov, k) ? 1 : 0;

    // Rows as sorted bitmask-ordered w-subsets; first row fixed to columns
    // 0..w-1 (column symmetry), later rows non-decreasing (row symmetry).
    std::vector<uint64_t> rows(n, 0);
    std::vector<int> colcount(n, 0);
    uint64_t first = (w == 64) ? ~0ULL : ((1ULL << w) - 1);

    std::vector<uint64_t> candidates;  // all w-subsets of n columns, ascending
    {
        std::vector<int> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            uint64_t m = 0;
            for (int i : idx) m |= 1ULL << i;
            candidates.push_back(m);
            int i = w - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::sort(candidates.begin(), candidates.end());
    }

    bool exceeded = false;

    std::function<bool(int, std::size_t)> place = [&](int r, std::size_t from) -> bool {
        if (exceeded) return false;
        if (r == n) {
            for (int c = 0; c < n; ++c)
                if (colcount[c] != w) return false;
            GwMatrix s(n, 1);
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < n; ++c)
                    if (rows[i] >> c & 1) s.set(i, c, 0);
            ++out.supports_tried;
            LiftOptions lo;
            lo.budget = budget > out.nodes ? budget - out.nodes : 1;
            LiftResult lr = lift(LiftInstance{s, k}, lo);
            out.nodes += lr.nodes;
            if (lr.status == LiftStatus::Lifted) {
                out.witness = std::move(lr.witness);
                return true;
            }
            if (lr.status == LiftStatus::BudgetExceeded) exceeded = true;
            return false;
        }
        for (std::size_t ci = from; ci < candidates.size(); ++ci) {
            uint64_t cand = candidates[ci];
            bool ok = true;
            for (int c = 0; c < n && ok; ++c)
                if (cand >> c & 1) {
                    if (colcount[c] + 1 > w) ok = false;
                }
            if (!ok) continue;
            for (int a = 0; a < r && ok; ++a)
                if (!ov_ok[static_cast<std::size_t>(__builtin_popcountll(rows[a] & cand))]) ok = false;
            if (!ok) continue;
            // Column capacity: remaining rows must be able to finish every column.
            for (int c = 0; c < n && ok; ++c) {
                int cc = colcount[c] + ((cand >> c) & 1);
                if (w - cc > n - r - 1) ok = false;
            }
            if (!ok) continue;
            rows[r] = cand;
            for (int c = 0; c < n; ++c)
                if (cand >> c & 1) ++colcount[c];
            if (place(r + 1, ci)) return true;
            for (int c = 0; c < n; ++c)
                if (cand >> c & 1) --colcount[c];
            rows[r] = 0;
            if (exceeded) return false;
        }
        return false;
    };

    // Fix the first row, then recurse with non-decreasing rows.
    rows[0] = first;
    for (int c = 0; c < w; ++c) colcount[c] = 1;
    std::size_t first_idx = std::lower_bound(candidates.begin(), candidates.end(), first) - candidates.begin();
    bool found = place(1, first_idx);

    if (found) {
        out.status = LiftStatus::Lifted;
    } else if (exceeded) {
        out.status = LiftStatus::BudgetExceeded;
    } else {
        out.status = LiftStatus::NoLift;
    }
    return out;
}

}  // namespace cgw
