#include "cgw/tables.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgw/constructions.hpp"
#include "cgw/gf.hpp"
#include "cgw/nonexistence.hpp"

namespace cgw {

bool WitnessStore::add(const GwMatrix& m, const std::string& recipe) {
    if (k_ % m.root_order() != 0) return false;
    GwMatrix e = m.root_order() == k_ ? m : m.reencode(k_);
    VerifyReport rep = verify(e);
    if (!rep.ok) throw std::logic_error("WitnessStore: witness failed verification (" + recipe + ")");
    auto key = std::pair<int, int>{e.order(), *rep.weight};
    auto it = map_.find(key);
    if (it != map_.end()) {
        if (it->second.recipe != recipe) it->second.alternates.push_back(recipe);
        return false;
    }
    map_.emplace(key, WitnessEntry(std::move(e), key.first, key.second, recipe));
    return true;
}

const WitnessEntry* WitnessStore::find(int n, int w) const {
    auto it = map_.find({n, w});
    return it == map_.end() ? nullptr : &it->second;
}

namespace {

// Enumerates Berman parameter tuples whose output order fits the grid.
void seed_berman(WitnessStore& store, int k, int nmax) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        for (int nn = 1; nn <= 4; ++nn) {
            long long q0 = 1;
            bool over = false;
            for (int i = 0; i < nn; ++i) {
                q0 *= p;
                if (q0 > 1 << 12) over = true;
            }
            if (over) break;
            for (int t = 2; t <= 4; ++t) {
                long long sz = 1;
                bool sz_over = false;
                for (int i = 0; i < t; ++i) {
                    sz *= q0;
                    if (sz > 4 * 100000LL) sz_over = true;
                }
                if (sz_over) break;
                for (int r = 2; r <= q0 - 1; ++r) {
                    if ((q0 - 1) % r != 0) continue;
                    long long order = (sz - 1) / r;
                    if (order > nmax) continue;
                    for (int d = 2; d <= r; ++d) {
                        if (r % d != 0 || k % d != 0) continue;
                        Recipe rc{"berman", {{"p", p}, {"n", nn}, {"t", t}, {"r", r}, {"d", d}}};
                        store.add(berman_cgw(p, nn, t, r, d), rc.to_string());
                    }
                }
            }
        }
    }
}

void seed_paley(WitnessStore& store, int k, int nmax) {
    for (long long q = 2; q + 1 <= nmax; ++q) {
        auto pf = prime_factors(q);
        if (pf.size() != 1) continue;
        for (int p = 2; p <= k; ++p) {
            if (k % p != 0 || !is_prime(p) || (q - 1) % p != 0) continue;
            Recipe rc{"paley", {{"q", q}, {"p", p}}};
            store.add(paley_cgw(q, p), rc.to_string());
        }
    }
}

void seed_witness_files(WitnessStore& store, int nmax) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(data_dir()) / "witnesses";
    if (!fs::exists(dir)) return;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".cgw") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        GwMatrix m = load_matrix_file(f.string());
        if (m.order() > nmax) continue;
        if (store.k() % m.root_order() != 0) continue;
        store.add(m, "file(" + f.filename().string() + ")");
    }
}

void seed_wppgp(WitnessStore& store, int nmax) {
    for (const auto& p : bundled_wppgp_pairs()) {
        int k_out = (p.k % 2 == 0) ? p.k : 2 * p.k;
        if (store.k() % k_out != 0) continue;
        if (2 * static_cast<int>(p.a.size()) > nmax) continue;
        Recipe rc{"wppgp", {{"pair", p.id}}};
        store.add(wppgp_to_cgw(p.a, p.b, p.alpha_exp), rc.to_string());
    }
}

// Weave instances used by the grids: circulant weight-3 masks over a
// single (3,3) block, and the mixed {3,4}-sum mask reaching order 13.
void closure_weave(WitnessStore& store, int nmax) {
    const WitnessEntry* f3 = store.find(3, 3);
    if (!f3) return;
    for (int m = 4; 3 * m <= nmax; ++m) {
        std::vector<std::vector<int>> mask(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int d = 0; d < 3; ++d) mask[i][(i + d) % m] = 1;
        std::vector<GwMatrix> blocks(m, f3->m);
        store.add(weave(mask, blocks, blocks), "weave(circ3,m=" + std::to_string(m) + ",block=(3,3))");
    }
    const WitnessEntry* w43 = store.find(4, 3);
    if (w43 && nmax >= 13) {
        std::vector<std::vector<int>> mask = {
            {1, 1, 0, 1},
            {1, 0, 1, 1},
            {0, 1, 1, 1},
            {1, 1, 1, 1},
        };
        std::vector<GwMatrix> as = {f3->m, f3->m, f3->m, w43->m};
        std::vector<GwMatrix> bs = {f3->m, f3->m, f3->m, w43->m};
        store.add(weave(mask, as, bs), "weave(mixed34,block=(3,3)+(4,3))");
    }
}

}  // namespace

std::vector<LiftingFact> load_lifting_facts() {
    std::vector<LiftingFact> out;
    std::ifstream f(data_dir() + "/lifting_facts.txt");
    if (!f) return out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        LiftingFact fact{};
        std::string status;
        if (is >> fact.n >> fact.w >> fact.k >> status >> fact.nodes >> fact.supports) {
            if (status != "NOLIFT") throw std::runtime_error("lifting_facts: unexpected status " + status);
            out.push_back(fact);
        }
    }
    return out;
}

std::vector<LiteratureFact> load_literature_facts() {
    std::vector<LiteratureFact> out;
    std::ifstream f(data_dir() + "/literature_e.txt");
    if (!f) return out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        LiteratureFact fact;
        if (is >> fact.n >> fact.w >> fact.k) {
            std::getline(is, fact.citation);
            while (!fact.citation.empty() && fact.citation.front() == ' ') fact.citation.erase(0, 1);
            out.push_back(fact);
        }
    }
    return out;
}

Grid build_grid(int k, int nmax, WitnessStore* store_out) {
    if (k < 2) throw std::invalid_argument("build_grid: k must be >= 2");
    WitnessStore store(k);

    // Seeds.
    for (int n = 1; n <= nmax; ++n) store.add(GwMatrix::identity(n), "identity(n=" + std::to_string(n) + ")");
    for (int d = 2; d <= nmax; ++d)
        if (k % d == 0) store.add(fourier(d), "fourier(k=" + std::to_string(d) + ")");
    seed_paley(store, k, nmax);
    seed_berman(store, k, nmax);
    if (k % 4 == 0 && nmax >= 10) store.add(sw_cgw(9), "sw(q=9)");
    seed_wppgp(store, nmax);
    seed_witness_files(store, nmax);

    // Closure rounds: binary operations over everything found so far.
    bool changed = true;
    int rounds = 0;
    while (changed && ++rounds < 12) {
        changed = false;
        std::vector<const WitnessEntry*> cur;
        for (const auto& [key, e] : store.all()) cur.push_back(&e);

        for (const auto* a : cur) {
            // border with the identity needs an even target order.
            if (k % 2 == 0 && 2 * a->n <= nmax) {
                GwMatrix b = border_pair(a->m, GwMatrix::identity(a->n));
                if (store.add(b, "border_pair(" + a->recipe + ",identity(n=" + std::to_string(a->n) + "))"))
                    changed = true;
            }
        }
        for (const auto* a : cur) {
            for (const auto* b : cur) {
                if (a->w == b->w && a->n + b->n <= nmax) {
                    if (store.add(direct_sum(a->m, b->m), "direct_sum(" + a->recipe + "," + b->recipe + ")"))
                        changed = true;
                }
                if (a->n * b->n <= nmax && a->n > 1 && b->n > 1) {
                    if (store.add(kronecker(a->m, b->m), "kronecker(" + a->recipe + "," + b->recipe + ")"))
                        changed = true;
                }
            }
        }
        std::size_t before = store.all().size();
        closure_weave(store, nmax);
        if (store.all().size() != before) changed = true;
    }

    // Literature and lifting data.
    std::map<std::pair<int, int>, std::string> lit_e, lit_n, lift_n;
    for (const auto& f : load_literature_facts())
        if (f.k == k) lit_e[{f.n, f.w}] = f.citation;
    for (const auto& f : load_lifting_facts())
        if (f.k == k)
            lift_n[{f.n, f.w}] = "lifting(cell n=" + std::to_string(f.n) + " w=" + std::to_string(f.w) +
                                 " k=" + std::to_string(f.k) + " exhausted, " + std::to_string(f.supports) +
                                 " candidate supports)";
    if (k == 2 || k % 2 == 0) {
        // The k=2 grid is bundled literature (the classification of real
        // weighing matrices up to order 15). N there transfers to even k by
        // the survey's compilation convention; E transfers soundly since
        // U_2 embeds in U_k.
        RefGrid k2 = load_reference_grid(2);
        for (const auto& [key, st] : k2.cells) {
            if (key.first > nmax) continue;
            if (st == RefState::N)
                lit_n.emplace(key, k == 2 ? "literature(k=2 classification)" : "literature(k=2 grid: no W(n,w))");
            else if (st == RefState::E && k == 2)
                lit_e.emplace(key, "k=2 classification");
            else if (st == RefState::E && k > 2)
                lit_e.emplace(key, "k=2 grid: W(n,w) exists, U_2 in U_" + std::to_string(k));
        }
    }

    Grid g;
    g.k = k;
    g.nmax = nmax;
    for (int n = 1; n <= nmax; ++n) {
        for (int w = 1; w <= n; ++w) {
            Verdict v;
            if (const WitnessEntry* e = store.find(n, w)) {
                v.state = CellState::Exists;
                v.provenance = "witness(" + e->recipe + ")";
            } else {
                RuleVerdict rv = analytic_rules(n, w, k);
                auto sp = sporadic(n, w, k);
                if (rv.applicable || sp) {
                    v.state = CellState::NotExists;
                    std::string ids;
                    for (const auto& h : rv.rules_fired) ids += (ids.empty() ? "" : ";") + h.id;
                    if (sp) ids += (ids.empty() ? "" : ";") + sp->id;
                    v.provenance = "analytic(" + ids + ")";
                } else if (auto it = lift_n.find({n, w}); it != lift_n.end()) {
                    v.state = CellState::NotExists;
                    v.provenance = it->second;
                } else if (auto itn = lit_n.find({n, w}); itn != lit_n.end()) {
                    v.state = CellState::NotExists;
                    v.provenance = itn->second;
                } else if (auto ite = lit_e.find({n, w}); ite != lit_e.end()) {
                    v.state = CellState::Exists;
                    v.provenance = "literature(" + ite->second + ")";
                } else {
                    v.state = CellState::Unknown;
                    v.provenance = "none";
                }
            }
            g.cells[{n, w}] = std::move(v);
        }
    }
    if (store_out) *store_out = std::move(store);
    return g;
}

RefGrid load_reference_grid(int k) {
    std::string path = data_dir() + "/reference/table_k" + std::to_string(k) + ".txt";
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open reference grid: " + path);
    RefGrid g;
    g.k = k;
    std::string line;
    int n = 0;
    bool in_grid = false;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string tok;
        is >> tok;
        if (tok == "k") {
            int kk;
            is >> kk;
            if (kk != k) throw std::runtime_error("reference grid: k mismatch in " + path);
        } else if (tok == "grid") {
            in_grid = true;
            n = 0;
        } else if (tok == "erratum") {
            RefGrid::Erratum e;
            std::string from, to, arrow;
            is >> e.n >> e.w >> from >> arrow >> to;
            auto st = [](const std::string& s) {
                if (s == "E") return RefState::E;
                if (s == "N") return RefState::N;
                return RefState::Unresolved;
            };
            e.from = st(from);
            e.to = st(to);
            std::getline(is, e.reason);
            while (!e.reason.empty() && e.reason.front() == ' ') e.reason.erase(0, 1);
            g.errata.push_back(e);
        } else if (in_grid) {
            ++n;
            int w = 0;
            do {
                ++w;
                RefState st;
                if (tok == "E")
                    st = RefState::E;
                else if (tok == "N")
                    st = RefState::N;
                else if (tok == "?")
                    st = RefState::Unresolved;
                else
                    throw std::runtime_error("reference grid: bad token '" + tok + "' in " + path);
                g.printed[{n, w}] = st;
            } while (is >> tok);
            if (w != n) throw std::runtime_error("reference grid: row " + std::to_string(n) + " has " +
                                                 std::to_string(w) + " entries in " + path);
        }
    }
    g.nmax = n;
    g.cells = g.printed;
    for (const auto& e : g.errata) {
        auto it = g.cells.find({e.n, e.w});
        if (it == g.cells.end() || it->second != e.from)
            throw std::runtime_error("reference grid: erratum does not match printed value");
        it->second = e.to;
    }
    return g;
}

GridDiff compare_reference(const Grid& g, const RefGrid& ref) {
    if (g.k != ref.k) throw std::invalid_argument("compare_reference: k mismatch");
    GridDiff d;
    int nmax = std::min(g.nmax, ref.nmax);
    for (int n = 1; n <= nmax; ++n) {
        for (int w = 1; w <= n; ++w) {
            const Verdict& v = g.at(n, w);
            RefState r = ref.cells.at({n, w});
            auto cell = "(" + std::to_string(n) + "," + std::to_string(w) + ")";
            if (r == RefState::Unresolved) {
                if (v.state != CellState::Unknown) {
                    d.improvements.push_back({n, w, cell + " reference '?' decided: " +
                                                        (v.state == CellState::Exists ? "E " : "N ") + v.provenance});
                } else {
                    ++d.agreements;
                }
            } else if (v.state == CellState::Unknown) {
                d.coverage_gaps.push_back({n, w, cell + " reference says " + (r == RefState::E ? "E" : "N") +
                                                     ", grid is undecided"});
            } else {
                bool ge = v.state == CellState::Exists;
                bool re = r == RefState::E;
                if (ge == re) {
                    ++d.agreements;
                } else {
                    d.contradictions.push_back({n, w, cell + " grid says " + (ge ? "E" : "N") + " [" + v.provenance +
                                                          "], reference says " + (re ? "E" : "N")});
                }
            }
        }
    }
    return d;
}

std::string render_grid(const Grid& g) {
    std::ostringstream os;
    os << "k=" << g.k << " existence grid (E/N/?), rows n=1.." << g.nmax << "\n";
    os << "n\\w";
    for (int w = 1; w <= g.nmax; ++w) os << " " << (w < 10 ? " " : "") << w;
    os << "\n";
    for (int n = 1; n <= g.nmax; ++n) {
        os << (n < 10 ? " " : "") << n << " ";
        for (int w = 1; w <= n; ++w) {
            const Verdict& v = g.at(n, w);
            char c = v.state == CellState::Exists ? 'E' : v.state == CellState::NotExists ? 'N' : '?';
            os << "  " << c;
        }
        os << "\n";
    }
    return os.str();
}

std::string grid_csv(const Grid& g) {
    std::ostringstream os;
    os << "n,w,k,state,provenance\n";
    for (int n = 1; n <= g.nmax; ++n)
        for (int w = 1; w <= n; ++w) {
            const Verdict& v = g.at(n, w);
            std::string st = v.state == CellState::Exists ? "E" : v.state == CellState::NotExists ? "N" : "?";
            std::string prov = v.provenance;
            for (auto& c : prov)
                if (c == ',') c = ';';
            os << n << "," << w << "," << g.k << "," << st << "," << prov << "\n";
        }
    return os.str();
}

std::string render_diff(const GridDiff& d, const RefGrid& ref) {
    std::ostringstream os;
    os << "agreements: " << d.agreements << "\n";
    os << "contradictions: " << d.contradictions.size() << "\n";
    for (const auto& i : d.contradictions) os << "  HARD " << i.detail << "\n";
    os << "coverage gaps: " << d.coverage_gaps.size() << "\n";
    for (const auto& i : d.coverage_gaps) os << "  GAP " << i.detail << "\n";
    os << "improvements: " << d.improvements.size() << "\n";
    for (const auto& i : d.improvements) os << "  NEW " << i.detail << "\n";
    if (!ref.errata.empty()) {
        os << "reference errata applied: " << ref.errata.size() << "\n";
        for (const auto& e : ref.errata)
            os << "  ERRATUM (" << e.n << "," << e.w << ") " << e.reason << "\n";
    }
    return os.str();
}

}  // namespace cgw
