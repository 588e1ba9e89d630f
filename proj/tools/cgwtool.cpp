// Command-line surface: construct, verify, lift, rules, grid, code,
// mindist, quantum, fingerprint. Exit codes: 0 success, 1 negative result
// (NoLift / not a CGW / hard contradiction), 2 usage error, 3 budget
// exceeded. '-' reads stdin wherever a file path is expected.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cgw/codes.hpp"
#include "cgw/constructions.hpp"
#include "cgw/lifting.hpp"
#include "cgw/matrix.hpp"
#include "cgw/nonexistence.hpp"
#include "cgw/quantum.hpp"
#include "cgw/tables.hpp"

using namespace cgw;

namespace {

GwMatrix read_matrix_arg(const std::string& path) {
    if (path == "-") return parse_matrix(std::cin);
    return load_matrix_file(path);
}

LinearCode read_code_arg(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_code_text(ss.str());
    }
    return load_code_file(path);
}

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CGW(n,w;k) engine: construction, verification, lifting, existence grids, codes"};
    app.require_subcommand(1);

    std::string recipe_text, file_arg, out_path;
    int opt_k = 2, opt_n = 0, opt_w = 0, opt_q = 2, opt_nmax = 15;
    unsigned long long budget = 1'000'000'000ULL;
    unsigned long long lift_budget = 100'000'000ULL;
    int threads = default_threads();
    bool compare = false, csv = false, gram = false, weights = false, no_norm = false, skip_cd = false;

    auto* c_construct = app.add_subcommand("construct", "emit a recipe's matrix as text");
    c_construct->add_option("recipe", recipe_text, "name(key=value,...)")->required();

    auto* c_verify = app.add_subcommand("verify", "check the CGW property of a matrix file");
    c_verify->add_option("file", file_arg)->required();
    c_verify->add_flag("--gram", gram, "report every failing row pair");

    auto* c_lift = app.add_subcommand("lift", "lift a 0/1 support to a CGW or refute");
    c_lift->add_option("file", file_arg)->required();
    c_lift->add_option("--k", opt_k, "root order")->required();
    c_lift->add_option("--budget", lift_budget, "node limit");
    c_lift->add_option("--threads", threads);
    c_lift->add_flag("--no-normalize", no_norm, "search without dephasing normalization");

    auto* c_rules = app.add_subcommand("rules", "analytic non-existence rules for (n,w,k)");
    c_rules->add_option("--n", opt_n)->required();
    c_rules->add_option("--w", opt_w)->required();
    c_rules->add_option("--k", opt_k)->required();

    auto* c_grid = app.add_subcommand("grid", "build the existence grid for one k");
    c_grid->add_option("--k", opt_k)->required();
    c_grid->add_option("--nmax", opt_nmax);
    c_grid->add_flag("--compare", compare, "diff against the bundled reference transcription");
    c_grid->add_flag("--csv", csv, "emit n,w,k,state,provenance CSV");

    auto* c_code = app.add_subcommand("code", "map a CGW to its GF(q^2) code file");
    c_code->add_option("file", file_arg)->required();
    c_code->add_option("--q", opt_q, "base field size (k must equal q+1)")->required();

    auto* c_mindist = app.add_subcommand("mindist", "exact minimum distance of a code file");
    c_mindist->add_option("file", file_arg)->required();
    c_mindist->add_option("--budget", budget);
    c_mindist->add_option("--threads", threads);
    c_mindist->add_flag("--weights", weights, "emit the full weight distribution as CSV");

    auto* c_quantum = app.add_subcommand("quantum", "run the CGW -> quantum-code pipeline");
    c_quantum->add_option("file", file_arg)->required();
    c_quantum->add_option("--budget", budget);
    c_quantum->add_option("--threads", threads);
    c_quantum->add_flag("--skip-code-distance", skip_cd, "only dimensions and dual distance");

    auto* c_fp = app.add_subcommand("fingerprint", "equivalence-invariant fingerprint of a CGW");
    c_fp->add_option("file", file_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_construct->parsed()) {
            std::cout << serialize_matrix(build_recipe(parse_recipe(recipe_text)));
            return 0;
        }
        if (c_verify->parsed()) {
            GwMatrix m = read_matrix_arg(file_arg);
            VerifyReport r = verify(m, gram);
            if (r.ok) {
                std::cout << "CGW(" << m.order() << "," << *r.weight << ";" << m.root_order() << ")\n";
                return 0;
            }
            std::cout << "not a CGW: " << r.message << "\n";
            if (gram)
                for (const auto& f : r.all_failures)
                    std::cout << "  rows " << f.i << "," << f.j << ": " << f.value.to_string() << "\n";
            return 1;
        }
        if (c_lift->parsed()) {
            GwMatrix s = read_matrix_arg(file_arg);
            LiftOptions opts;
            opts.budget = lift_budget;
            opts.threads = threads;
            opts.normalize = !no_norm;
            LiftResult r = lift(LiftInstance{s, opt_k}, opts);
            if (r.status == LiftStatus::Lifted) {
                std::cout << "LIFTED nodes=" << r.nodes << "\n" << serialize_matrix(*r.witness);
                return 0;
            }
            if (r.status == LiftStatus::NoLift) {
                std::cout << "NOLIFT nodes=" << r.nodes << "\n";
                return 1;
            }
            std::cout << "BUDGET-EXCEEDED nodes=" << r.nodes << "\n";
            return 3;
        }
        if (c_rules->parsed()) {
            RuleVerdict v = analytic_rules(opt_n, opt_w, opt_k);
            auto sp = sporadic(opt_n, opt_w, opt_k);
            for (const auto& h : v.rules_fired) std::cout << h.id << ": " << h.anchor << "\n";
            if (sp && (v.rules_fired.empty() || sp->id != v.rules_fired.back().id))
                std::cout << sp->id << ": " << sp->anchor << "\n";
            if (!v.applicable && !sp) std::cout << "no rule fires\n";
            return 0;
        }
        if (c_grid->parsed()) {
            Grid g = build_grid(opt_k, opt_nmax);
            if (compare) {
                GridDiff d = compare_reference(g, load_reference_grid(opt_k));
                std::cout << render_diff(d, load_reference_grid(opt_k));
                return d.contradictions.empty() ? 0 : 1;
            }
            std::cout << (csv ? grid_csv(g) : render_grid(g));
            return 0;
        }
        if (c_code->parsed()) {
            GwMatrix m = read_matrix_arg(file_arg);
            auto pf = prime_factors(opt_q);
            if (pf.size() != 1) throw CLI::ValidationError("--q", "q must be a prime power");
            int p = static_cast<int>(pf[0]);
            int r = 0;
            for (long long t = opt_q; t > 1; t /= p) ++r;
            auto ctx = std::make_shared<FieldCtx>(p, 2 * r);
            std::cout << serialize_code(cgw_to_code(m, ctx));
            return 0;
        }
        if (c_mindist->parsed()) {
            LinearCode c = read_code_arg(file_arg);
            if (weights) {
                auto dist = weight_distribution(c, budget);
                std::cout << "weight,count\n";
                for (std::size_t w = 0; w < dist.size(); ++w)
                    if (dist[w]) std::cout << w << "," << dist[w] << "\n";
                return 0;
            }
            MinDistResult r = min_distance(c, budget, threads);
            if (!r.exact) {
                std::cout << "BUDGET-EXCEEDED evaluations=" << r.evaluations << "\n";
                return 3;
            }
            std::cout << "d=" << r.distance << " strategy=" << r.strategy << " evaluations=" << r.evaluations
                      << "\n";
            return 0;
        }
        if (c_quantum->parsed()) {
            GwMatrix m = read_matrix_arg(file_arg);
            PipelineReport rep = pipeline(m, budget, threads, skip_cd);
            std::cout << rep.text << "---\n" << rep.flat;
            return 0;
        }
        if (c_fp->parsed()) {
            std::cout << fingerprint(read_matrix_arg(file_arg)) << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
