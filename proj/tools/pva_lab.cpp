#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvalab/claims.hpp"
#include "pvalab/deform.hpp"
#include "pvalab/hydro.hpp"
#include "pvalab/obstruct.hpp"
#include "pvalab/pvadiff.hpp"

using namespace pvalab;

namespace {

// Named structure or bracket data file.
BracketStructure resolve_bracket(const std::string& spec) {
    for (const char* n : {"p1", "p2", "plp"})
        if (spec == n) return base_structure(spec);
    auto names = representative_names();
    if (std::find(names.begin(), names.end(), spec) != names.end())
        return representative(spec);
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("unknown bracket name or unreadable file: " + spec);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_bracket_file(text.str());
}

HydroStructure resolve_hydro(const std::string& spec) {
    if (spec == "p1") return hydro_p1();
    if (spec == "p2") return hydro_p2();
    if (spec == "plp") return hydro_plp();
    throw std::runtime_error("hydrodynamic data is only available for p1, p2, plp");
}

int cmd_verify(const std::string& what, const std::string& bracket) {
    if (what == "jacobi") {
        TriValue j = jacobiator(resolve_bracket(bracket));
        if (j.is_zero()) {
            std::printf("jacobiator(%s) = 0\n", bracket.c_str());
            return 0;
        }
        std::printf("jacobiator(%s) != 0; nonzero components:\n", bracket.c_str());
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj)
                for (int k = 0; k < 2; ++k)
                    if (!j(i, jj, k).is_zero())
                        std::printf("  (%d,%d,%d): %s\n", i + 1, jj + 1, k + 1,
                                    print_bivalue(j(i, jj, k)).c_str());
        return 1;
    }
    if (what == "skew") {
        BracketStructure r = skew_check(resolve_bracket(bracket));
        bool ok = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!r(i, j).is_zero()) {
                    ok = false;
                    std::printf("skew residual (%d,%d): %s\n", i + 1, j + 1,
                                print_bivalue(r(i, j)).c_str());
                }
        if (ok) std::printf("skew residual of %s = 0\n", bracket.c_str());
        return ok ? 0 : 1;
    }
    // mokhov
    MokhovReport rep = mokhov_check(resolve_hydro(bracket));
    for (int i = 0; i < 7; ++i)
        std::printf("condition %d: %s\n", i + 1, rep.ok[static_cast<std::size_t>(i)]
                                                     ? "holds"
                                                     : "violated");
    for (auto& r : rep.residuals) std::printf("  %s\n", r.c_str());
    return rep.all_ok() ? 0 : 1;
}

int cmd_certify(const std::string& base) {
    static const std::map<std::string, std::pair<std::string, std::size_t>> table = {
        {"p1", {"h23-p1", 4}},
        {"p2", {"h23-p2", 5}},
        {"plp", {"h23-plp", 2}},
    };
    auto it = table.find(base);
    if (it == table.end()) throw std::runtime_error("--base must be p1, p2 or plp");
    auto cert = certify_nontrivial(base, representative(it->second.first),
                                   it->second.second);
    std::printf("representative: %s\n", it->second.first.c_str());
    std::printf("cocycle: %s\n", cert.cocycle ? "yes" : "no");
    std::printf("functionals vanish on coboundaries: %s\n",
                cert.functionals_vanish_on_coboundaries ? "yes" : "no");
    for (std::size_t i = 0; i < cert.functional_names.size(); ++i)
        std::printf("  %s = %s\n", cert.functional_names[i].c_str(),
                    print_diffpoly(cert.functional_values[i]).c_str());
    std::printf("rank over the formal constants: %zu\n", cert.rank);
    if (!cert.ok()) {
        std::printf("FAILED: %s\n", cert.failure.c_str());
        return 1;
    }
    return 0;
}

int cmd_obstruction(const std::string& base, int prolong) {
    if (base == "plp" && prolong > 0) {
        PlpObstructionReport rep = plp_obstruction(prolong);
        std::printf("jet-free subsystem: %zu equations, prolonged to order %d\n",
                    rep.equations, rep.prolong_order);
        if (rep.inconsistent && rep.forces_c_zero) {
            std::printf("inconsistency certificate: the deformation extends only for "
                        "c1 = c2 = 0\n");
            for (auto& r : rep.residuals) std::printf("  residual: %s\n", r.c_str());
            return 0;
        }
        std::printf("inconclusive at this bound; consistency of the relaxation proves "
                    "nothing\n");
        return 0;
    }
    ExtensionProblem prob = make_extension_problem(base);
    struct Target {
        int i, j, k;
        LKey lk;
        const char* label;
    };
    std::vector<Target> targets;
    if (base == "p1") {
        targets.push_back({1, 1, 1, LKey{5, 0, 1, 0}, "l1^5*m1 in (2,2,2)"});
        targets.push_back({0, 0, 0, LKey{0, 5, 0, 1}, "l2^5*m2 in (1,1,1)"});
    } else if (base == "p2") {
        targets.push_back({0, 0, 1, LKey{0, 5, 0, 1}, "l2^5*m2 in (1,1,2)"});
        targets.push_back({0, 0, 1, LKey{0, 4, 0, 2}, "l2^4*m2^2 in (1,1,2)"});
    } else {
        std::printf("use --prolong K for the plp subsystem analysis\n");
        return 2;
    }
    for (auto& t : targets) {
        WitnessResult w = witness_coefficient(prob, t.i, t.j, t.k, t.lk);
        std::printf("%s:\n  candidate contribution: %s\n  source: %s\n", t.label,
                    print_linform(w.base_contribution).c_str(),
                    print_diffpoly(w.source).c_str());
    }
    if (base == "p2") {
        auto cons = consistency(extension_subsystem(prob), true);
        std::printf("jet-free subsystem: %s (rank %zu, %zu certificates)\n",
                    cons.consistent ? "consistent" : "inconsistent", cons.rank,
                    cons.certificates.size());
        for (std::size_t i = 0; i < cons.certificates.size() && i < 4; ++i)
            std::printf("  residual: %s\n",
                        print_diffpoly(cons.certificates[i].residual).c_str());
    }
    return 0;
}

int cmd_dims(int p, int dmax) {
    auto row = cohomology_dims(p, dmax);
    std::printf("dim H^%d_d for d = 1..%d:", p, dmax);
    for (auto v : row) std::printf(" %lld", v);
    std::printf("\n");
    return 0;
}

int cmd_flow(const std::string& bracket, const std::string& density) {
    auto f = hamiltonian_flow(resolve_bracket(bracket), parse_diffpoly(density));
    std::printf("p_t = %s; q_t = %s\n", print_diffpoly(f[0]).c_str(),
                print_diffpoly(f[1]).c_str());
    return 0;
}

int cmd_count(int degree) {
    std::printf("%zu\n", build_ansatz(degree).slots.size());
    return 0;
}

int cmd_eval(const std::string& bracket, const std::string& f, const std::string& g) {
    BiValue v = master_bracket(resolve_bracket(bracket), parse_diffpoly(f),
                               parse_diffpoly(g));
    std::printf("%s\n", print_bivalue(v).c_str());
    return 0;
}

int cmd_repro(int prolong) {
    ClaimOptions opts;
    if (prolong > 0) opts.prolong_order = prolong;
    auto results = run_claims({}, opts);
    std::cout << report(results) << "\n";
    const auto& reg = claim_registry(opts);
    bool ok = true;
    for (auto& r : results) {
        bool optional = false;
        for (auto& c : reg)
            if (c.id == r.claim_id) optional = c.optional;
        if (r.status == "fail" && !optional) ok = false;
        if (r.status != "pass")
            std::fprintf(stderr, "%s: %s%s\n", r.claim_id.c_str(), r.status.c_str(),
                         optional ? " (optional)" : "");
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for two-dimensional, two-component "
                 "Poisson vertex algebras"};
    app.require_subcommand(1);

    std::string verify_what, bracket_name, base_name, density, f_expr, g_expr, repro_what;
    int dims_p = 1, dims_dmax = 10, degree = 3, prolong = 0;

    auto* verify = app.add_subcommand("verify", "Residual checks on a bracket");
    verify->add_option("check", verify_what, "jacobi | skew | mokhov")
        ->required()
        ->check(CLI::IsMember({"jacobi", "skew", "mokhov"}));
    verify->add_option("--bracket", bracket_name, "named structure or data file")
        ->required();

    auto* certify = app.add_subcommand("certify", "Nontriviality certificate");
    certify->add_option("kind", repro_what, "nontrivial")
        ->required()
        ->check(CLI::IsMember({"nontrivial"}));
    certify->add_option("--base", base_name, "p1 | p2 | plp")->required();

    auto* obstruction = app.add_subcommand("obstruction", "Extension witnesses");
    obstruction->add_option("--base", base_name, "p1 | p2 | plp")->required();
    obstruction->add_option("--prolong", prolong, "prolongation order (plp)");

    auto* dims = app.add_subcommand("dims", "Cohomology dimension row");
    dims->add_option("--p", dims_p, "cochain level")->required();
    dims->add_option("--dmax", dims_dmax, "highest differential degree");

    auto* flow = app.add_subcommand("flow", "Evolution equations of a density");
    flow->add_option("--bracket", bracket_name)->required();
    flow->add_option("--hamiltonian", density, "density expression")->required();

    auto* count = app.add_subcommand("count", "Ansatz coefficient count");
    count->add_option("--degree", degree)->required()->check(CLI::IsMember({3, 5}));

    auto* eval = app.add_subcommand("eval", "Bracket of two expressions");
    eval->add_option("--bracket", bracket_name)->required();
    eval->add_option("--f", f_expr)->required();
    eval->add_option("--g", g_expr)->required();

    auto* repro = app.add_subcommand("repro", "Reproduce the recorded claims");
    repro->add_option("what", repro_what, "all")
        ->required()
        ->check(CLI::IsMember({"all"}));
    repro->add_option("--prolong", prolong, "prolongation order for the optional claim");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_what, bracket_name);
        if (certify->parsed()) return cmd_certify(base_name);
        if (obstruction->parsed()) return cmd_obstruction(base_name, prolong);
        if (dims->parsed()) return cmd_dims(dims_p, dims_dmax);
        if (flow->parsed()) return cmd_flow(bracket_name, density);
        if (count->parsed()) return cmd_count(degree);
        if (eval->parsed()) return cmd_eval(bracket_name, f_expr, g_expr);
        if (repro->parsed()) return cmd_repro(prolong);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
