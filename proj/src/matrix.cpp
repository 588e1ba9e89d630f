#include "cgw/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cgw {

GwMatrix::GwMatrix(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("GwMatrix: order must be >= 1");
    if (k < 1) throw std::invalid_argument("GwMatrix: root order must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * n, kZeroEntry);
}

GwMatrix GwMatrix::identity(int n, int k) {
    GwMatrix m(n, k);
    for (int i = 0; i < n; ++i) m.set(i, i, 0);
    return m;
}

void GwMatrix::set(int i, int j, int16_t v) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("GwMatrix::set: index");
    if (v >= k_ || v < kZeroEntry) throw std::invalid_argument("GwMatrix::set: exponent out of range");
    e_[static_cast<std::size_t>(i) * n_ + j] = v;
}

int GwMatrix::row_weight(int i) const {
    int w = 0;
    for (int j = 0; j < n_; ++j)
        if (!is_zero_at(i, j)) ++w;
    return w;
}

int GwMatrix::col_weight(int j) const {
    int w = 0;
    for (int i = 0; i < n_; ++i)
        if (!is_zero_at(i, j)) ++w;
    return w;
}

GwMatrix GwMatrix::reencode(int k_new) const {
    if (k_new % k_ != 0) throw std::invalid_argument("GwMatrix::reencode: target root order must be a multiple");
    const int f = k_new / k_;
    GwMatrix m(n_, k_new);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!is_zero_at(i, j)) m.set(i, j, static_cast<int16_t>(at(i, j) * f));
    return m;
}

GwMatrix GwMatrix::support() const {
    GwMatrix s(n_, 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!is_zero_at(i, j)) s.set(i, j, 0);
    return s;
}

CycElt GwMatrix::row_inner(int i, int j) const {
    std::vector<long long> coeffs(k_, 0);
    for (int c = 0; c < n_; ++c) {
        int16_t a = at(i, c), b = at(j, c);
        if (a < 0 || b < 0) continue;
        int t = a - b;
        if (t < 0) t += k_;
        coeffs[t] = checked_add(coeffs[t], 1);
    }
    return CycElt::from_coeffs(k_, std::move(coeffs));
}

VerifyReport verify(const GwMatrix& m, bool full_gram) {
    VerifyReport rep;
    const int n = m.order();

    const int w = m.row_weight(0);
    for (int i = 1; i < n; ++i) {
        if (m.row_weight(i) != w) {
            rep.message = "row " + std::to_string(i) + " has weight " + std::to_string(m.row_weight(i)) +
                          ", row 0 has weight " + std::to_string(w);
            return rep;
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            CycElt ip = m.row_inner(i, j);
            if (!ip.is_zero()) {
                if (!rep.first_failure) {
                    rep.first_failure = VerifyReport::Failure{i, j, ip};
                    rep.message = "rows " + std::to_string(i) + "," + std::to_string(j) +
                                  " have inner product " + ip.to_string();
                    if (!full_gram) return rep;
                }
                rep.all_failures.push_back(VerifyReport::Failure{i, j, ip});
            }
        }
    }
    if (rep.first_failure) return rep;

    // Sanity: columns must carry the same weight (forced for invertible W).
    for (int j = 0; j < n; ++j) {
        if (m.col_weight(j) != w) {
            rep.message = "column " + std::to_string(j) + " has weight " + std::to_string(m.col_weight(j));
            return rep;
        }
    }

    rep.ok = true;
    rep.weight = w;
    return rep;
}

namespace {

void check_monomial(const Monomial& t, int n, int k, const char* side) {
    if (static_cast<int>(t.perm.size()) != n || static_cast<int>(t.scale.size()) != n)
        throw std::invalid_argument(std::string("transform: malformed ") + side + " monomial size");
    std::vector<char> seen(n, 0);
    for (int v : t.perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument(std::string("transform: ") + side + " permutation is not a bijection");
        seen[v] = 1;
    }
    for (int s : t.scale)
        if (s < 0 || s >= k) throw std::invalid_argument(std::string("transform: ") + side + " scale exponent out of range");
}

}  // namespace

GwMatrix transform(const GwMatrix& m, const Monomial& row, const Monomial& col) {
    const int n = m.order(), k = m.root_order();
    check_monomial(row, n, k, "row");
    check_monomial(col, n, k, "column");
    GwMatrix r(n, k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int16_t e = m.at(row.perm[i], col.perm[j]);
            if (e < 0) continue;
            int t = e + row.scale[i] - col.scale[j];
            t %= k;
            if (t < 0) t += k;
            r.set(i, j, static_cast<int16_t>(t));
        }
    }
    return r;
}

std::string fingerprint(const GwMatrix& m) {
    VerifyReport rep = verify(m);
    if (!rep.ok) throw std::invalid_argument("fingerprint: input is not a CGW (" + rep.message + ")");
    const int n = m.order();

    auto intersections = [&](bool rows) {
        std::vector<int> sizes;
        sizes.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                int c = 0;
                for (int t = 0; t < n; ++t) {
                    bool a = rows ? !m.is_zero_at(i, t) : !m.is_zero_at(t, i);
                    bool b = rows ? !m.is_zero_at(j, t) : !m.is_zero_at(t, j);
                    if (a && b) ++c;
                }
                sizes.push_back(c);
            }
        }
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };

    std::ostringstream os;
    os << "CGWFP1 n=" << n << " w=" << *rep.weight << " k=" << m.root_order() << " R=";
    for (int s : intersections(true)) os << s << ",";
    os << " C=";
    for (int s : intersections(false)) os << s << ",";
    return os.str();
}

ParseError::ParseError(const std::string& what, int line_, int col_)
    : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
      line(line_),
      column(col_) {}

GwMatrix parse_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;

    // Skip comments and blank lines before the header.
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        break;
    }
    if (in.fail() && line.empty()) throw ParseError("missing header", lineno, 1);

    int n = -1, w = -1, k = -1;
    {
        std::istringstream hs(line);
        std::string tag, nf, wf, kf;
        hs >> tag >> nf >> wf >> kf;
        auto field = [&](const std::string& s, const char* key) {
            std::string prefix = std::string(key) + "=";
            if (s.rfind(prefix, 0) != 0) throw ParseError("malformed header field, expected " + prefix + "<int>", lineno, 1);
            try {
                return std::stoi(s.substr(prefix.size()));
            } catch (const std::exception&) {
                throw ParseError("malformed header value in " + s, lineno, 1);
            }
        };
        if (tag != "CGW") throw ParseError("malformed header, expected CGW", lineno, 1);
        n = field(nf, "n");
        w = field(wf, "w");
        k = field(kf, "k");
        std::string rest;
        if (hs >> rest) throw ParseError("trailing tokens after header", lineno, 1);
    }
    if (n < 1 || k < 1 || w < 0 || w > n) throw ParseError("header parameters out of range", lineno, 1);

    GwMatrix m(n, k);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of input, expected matrix row", lineno + 1, 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream rs(line);
        std::string tok;
        int j = 0;
        int col = 1;
        std::size_t pos = 0;
        while (rs >> tok) {
            pos = line.find(tok, pos);
            col = static_cast<int>(pos) + 1;
            pos += tok.size();
            if (j >= n) throw ParseError("ragged row: too many tokens", lineno, col);
            if (tok == ".") {
                ++j;
                continue;
            }
            int e;
            try {
                std::size_t used = 0;
                e = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("bad token '" + tok + "'", lineno, col);
            }
            if (e < 0 || e >= k) throw ParseError("exponent " + std::to_string(e) + " out of range for k=" + std::to_string(k), lineno, col);
            m.set(i, j, static_cast<int16_t>(e));
            ++j;
        }
        if (j != n) throw ParseError("ragged row: expected " + std::to_string(n) + " tokens, got " + std::to_string(j), lineno, 1);
    }
    return m;
}

GwMatrix parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

GwMatrix load_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open matrix file: " + path);
    return parse_matrix(f);
}

std::string serialize_matrix(const GwMatrix& m) {
    std::ostringstream os;
    os << "CGW n=" << m.order() << " w=" << m.row_weight(0) << " k=" << m.root_order() << "\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) os << " ";
            if (m.is_zero_at(i, j))
                os << ".";
            else
                os << m.at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

void save_matrix_file(const GwMatrix& m, const std::string& path, const std::string& comment) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write matrix file: " + path);
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cl;
        while (std::getline(cs, cl)) f << "# " << cl << "\n";
    }
    f << serialize_matrix(m);
}

}  // namespace cgw
