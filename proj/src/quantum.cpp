#include "cgw/quantum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cgw/cyclotomic.hpp"

namespace cgw {

long long prime_power_q_for_k(int k) {
    long long q = k - 1;
    if (q < 2) return 0;
    auto pf = prime_factors(q);
    return pf.size() == 1 ? q : 0;
}

QuantumParams derive_params(const LinearCode& c, unsigned long long budget, int threads) {
    if (!is_hso(c)) throw std::invalid_argument("derive_params: code is not Hermitian self-orthogonal");
    QuantumParams p;
    p.n = c.length();
    p.kq = c.length() - 2 * c.dim();
    p.q = static_cast<int>(c.field().subfield_order());

    LinearCode dual = hermitian_dual(c);
    MinDistResult d = min_distance(dual, budget, threads);
    if (!d.exact) throw std::runtime_error("derive_params: distance budget exceeded");
    p.d = d.distance;
    return p;
}

PipelineReport pipeline(const GwMatrix& w, unsigned long long budget, int threads, bool skip_code_distance) {
    VerifyReport rep = verify(w);
    if (!rep.ok) throw std::invalid_argument("pipeline: input is not a CGW (" + rep.message + ")");

    const int k = w.root_order();
    long long q = prime_power_q_for_k(k);
    if (q == 0)
        throw std::invalid_argument(
            "pipeline: unsupported root order k=" + std::to_string(k) +
            "; k must be q+1 for a prime power q (k in {3,4,5,6,8,9,10,...})");

    auto pf = prime_factors(q);
    const int p = static_cast<int>(pf[0]);
    int r = 0;
    long long t = q;
    while (t > 1) {
        t /= p;
        ++r;
    }
    if (*rep.weight % p != 0)
        throw std::invalid_argument("pipeline: characteristic " + std::to_string(p) +
                                    " does not divide the weight " + std::to_string(*rep.weight));

    auto ctx = std::make_shared<FieldCtx>(p, 2 * r);
    LinearCode code = cgw_to_code(w, ctx);
    if (!is_hso(code)) throw std::logic_error("pipeline: image code failed the self-orthogonality assertion");

    PipelineReport out;
    out.q2 = ctx->size();
    out.code_dim = code.dim();

    if (!skip_code_distance) {
        MinDistResult cd = min_distance(code, budget, threads);
        if (!cd.exact) throw std::runtime_error("pipeline: code distance budget exceeded");
        out.code_dist = cd.distance;
    }

    out.params = derive_params(code, budget, threads);
    out.params.provenance = "CGW(" + std::to_string(w.order()) + "," + std::to_string(*rep.weight) + ";" +
                            std::to_string(k) + ")";

    std::ostringstream os, kv;
    os << "SOURCE CGW(" << w.order() << "," << *rep.weight << ";" << k << ")\n";
    os << "CODE [" << code.length() << "," << code.dim();
    if (!skip_code_distance) os << "," << out.code_dist;
    os << "]_" << out.q2 << " hermitian-self-orthogonal\n";
    os << "DUAL [" << code.length() << "," << (code.length() - code.dim()) << "," << out.params.d << "]_" << out.q2
       << "\n";
    os << "QECC [[" << out.params.n << "," << out.params.kq << "," << out.params.d << "]]_" << out.params.q << "\n";
    out.text = os.str();

    kv << "source_n=" << w.order() << "\n"
       << "source_w=" << *rep.weight << "\n"
       << "source_k=" << k << "\n"
       << "q2=" << out.q2 << "\n"
       << "code_n=" << code.length() << "\n"
       << "code_dim=" << code.dim() << "\n";
    if (!skip_code_distance) kv << "code_dist=" << out.code_dist << "\n";
    kv << "qecc_n=" << out.params.n << "\n"
       << "qecc_k=" << out.params.kq << "\n"
       << "qecc_d=" << out.params.d << "\n"
       << "qecc_q=" << out.params.q << "\n";
    out.flat = kv.str();
    return out;
}

}  // namespace cgw
