#include "pvalab/obstruct.hpp"

#include <stdexcept>

#include "pvalab/exprio.hpp"

namespace pvalab {

TriValue square_bracket(const BracketStructure& rep) { return jacobiator(rep); }

std::set<std::pair<int, int>> square_fingerprint(const TriValue& t) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int k = 0; k < kNumComponents; ++k)
                for (auto& [lk, dp] : t(i, j, k).terms)
                    for (auto& [mo, co] : dp.terms)
                        for (auto& [cm, r] : co.terms) {
                            int lo = -1, hi = -1;
                            for (int a = 0; a < 5; ++a)
                                for (int rep2 = 0; rep2 < cm.ce[static_cast<std::size_t>(a)];
                                     ++rep2) {
                                    if (lo < 0)
                                        lo = a;
                                    else
                                        hi = a;
                                }
                            if (hi < 0) hi = lo;
                            if (lo >= 0) out.emplace(lo, hi);
                        }
    return out;
}

ExtensionProblem make_extension_problem(const std::string& base) {
    ExtensionProblem prob;
    prob.base = base;
    prob.p0 = base_structure(base);
    prob.infinitesimal = representative("h23-" + base);
    prob.candidate = build_ansatz5(1);
    prob.base_image = d_on_2cochain(prob.p0, prob.candidate.bracket());
    prob.source = square_bracket(prob.infinitesimal);
    return prob;
}

namespace {

// Jet-free part of a coefficient DiffPoly as an affine-linear form.
LinForm jet_free_linform(const DiffPoly& value) {
    std::map<std::vector<JetFactor>, LinForm> split;
    collect_into(value, split);
    auto it = split.find({});
    return it == split.end() ? LinForm{} : it->second;
}

DiffPoly jet_free_part(const DiffPoly& value) {
    DiffPoly r;
    for (auto& [mo, co] : value.terms)
        if (mo.jets.empty()) r.terms.emplace(mo, co);
    return r;
}

} // namespace

WitnessResult witness_coefficient(const ExtensionProblem& prob, int i, int j, int k,
                                  const LKey& target) {
    int total = target.l1 + target.l2 + target.m1 + target.m2;
    if (total > 6) throw std::invalid_argument("witness target degree exceeds 6");
    WitnessResult r;
    auto bi = prob.base_image(i, j, k).terms.find(target);
    if (bi != prob.base_image(i, j, k).terms.end())
        r.base_contribution = jet_free_linform(bi->second);
    auto si = prob.source(i, j, k).terms.find(target);
    if (si != prob.source(i, j, k).terms.end()) r.source = jet_free_part(si->second);
    return r;
}

BiHamiltonianReport bihamiltonian_check() {
    BiHamiltonianReport rep;
    auto push = [&](std::string name, bool pass) {
        rep.checks.push_back({std::move(name), pass});
    };
    const std::array<std::optional<Rat>, 5> c34 = {Rat(0), Rat(0), Rat(0), std::nullopt,
                                                   std::nullopt};
    const std::array<std::optional<Rat>, 5> c3only = {Rat(0), Rat(0), Rat(0),
                                                      std::nullopt, Rat(0)};
    const std::array<std::optional<Rat>, 5> c04 = {std::nullopt, Rat(0), Rat(0), Rat(0),
                                                   std::nullopt};
    auto p1 = base_structure("p1");
    auto p2 = base_structure("p2");
    auto k1 = set_constants(representative("h23-p1"), c34);
    auto k2a = set_constants(representative("h23-p2"), c3only);
    auto k2b = set_constants(representative("h23-p2"), c04);
    push("p1 jacobiator at (0,0,c3,c4)", jacobiator(k1).is_zero());
    push("p1 pair (c3 part, c4 part)",
         schouten(representative("p1-c3"), representative("p1-c4")).is_zero());
    push("p1 pair with base", schouten(p1, k1).is_zero());
    push("p2 jacobiator at (0,0,0,c3,0)", jacobiator(k2a).is_zero());
    push("p2 jacobiator at (c0,0,0,0,c4)", jacobiator(k2b).is_zero());
    push("p2 pair (c0 part, c4 part)",
         schouten(representative("p2-defo0"), representative("p2-defo4")).is_zero());
    push("p2 pair with base, (0,0,0,c3,0)", schouten(p2, k2a).is_zero());
    push("p2 pair with base, (c0,0,0,0,c4)", schouten(p2, k2b).is_zero());
    return rep;
}

LinearSystem extension_subsystem(const ExtensionProblem& prob) {
    TriValue c = prob.base_image;
    c += prob.source;
    LinearSystem sys;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int k = 0; k < kNumComponents; ++k)
                for (auto& [lk, dp] : c(i, j, k).terms)
                    sys.add(jet_free_linform(dp));
    return sys;
}

LinearSystem plp_subsystem() { return extension_subsystem(make_extension_problem("plp")); }

namespace {

// Quadratic coefficient triple (alpha, beta, gamma) of alpha*c1^2 +
// beta*c1*c2 + gamma*c2^2; true when the common zero set is only the origin.
bool quadratics_force_zero(std::vector<std::array<Rat, 3>> quads) {
    if (quads.empty()) return false;
    // Row-reduce the triples.
    std::vector<std::array<Rat, 3>> rows;
    for (auto& q : quads) {
        auto r = q;
        for (auto& b : rows) {
            int lead = b[0] != 0 ? 0 : b[1] != 0 ? 1 : 2;
            if (r[static_cast<std::size_t>(lead)] != 0) {
                Rat f = r[static_cast<std::size_t>(lead)] / b[static_cast<std::size_t>(lead)];
                for (int t = 0; t < 3; ++t)
                    r[static_cast<std::size_t>(t)] -= f * b[static_cast<std::size_t>(t)];
            }
        }
        if (r[0] != 0 || r[1] != 0 || r[2] != 0) rows.push_back(r);
        if (rows.size() == 3) break;
    }
    if (rows.size() == 3) return true; // c1^2 = c1 c2 = c2^2 = 0
    if (rows.size() <= 1) {
        if (rows.empty()) return false;
        // Single quadratic alpha t^2 + beta t + gamma (t = c1/c2) plus the
        // c2 = 0 branch; only definite quadratics force the origin.
        auto& [a, b, g] = rows[0];
        if (a == 0 || g == 0) return false; // admits c2 = 0 or c1 = 0 line
        return b * b - 4 * a * g < 0;
    }
    // Two independent quadratics: check for a common projective root.
    // Roots with c2 != 0: t = c1/c2 solves both a t^2 + b t + g = 0.
    auto& q1 = rows[0];
    auto& q2 = rows[1];
    // c2 = 0 branch: needs alpha1 = alpha2 = 0.
    if (q1[0] == 0 && q2[0] == 0) return false;
    // Resultant of the two quadratics.
    Rat a1 = q1[0], b1 = q1[1], g1 = q1[2];
    Rat a2 = q2[0], b2 = q2[1], g2 = q2[2];
    Rat res = (a1 * g2 - a2 * g1) * (a1 * g2 - a2 * g1) -
              (a1 * b2 - a2 * b1) * (b1 * g2 - b2 * g1);
    if (res != 0) return true;
    // A common root exists over the closure; check it is rational and real.
    // Common root of the pencil: solve the linear combination eliminating t^2.
    Rat lb = a2 * b1 - a1 * b2, lg = a2 * g1 - a1 * g2;
    if (lb == 0) {
        // Degenerate pencil; fall back: both proportional was excluded, so
        // the common root satisfies lg = 0 identically -- treat as root.
        return false;
    }
    Rat t = -lg / lb;
    // t is a genuine common rational root => nonzero common zero exists.
    return !(a1 * t * t + b1 * t + g1 == 0 && a2 * t * t + b2 * t + g2 == 0);
}

DiffPoly strip_c12(const DiffPoly& v) {
    DiffPoly r;
    for (auto& [mo, co] : v.terms) {
        Coeff nc;
        for (auto& [cm, rr] : co.terms)
            if (cm.ce[1] == 0 && cm.ce[2] == 0) nc.terms.emplace(cm, rr);
        if (!nc.terms.empty()) r.terms.emplace(mo, nc);
    }
    return r;
}

} // namespace

PlpObstructionReport plp_obstruction(int prolong_order) {
    PlpObstructionReport rep;
    rep.prolong_order = prolong_order;
    LinearSystem sys = plp_subsystem();
    rep.equations = sys.size();
    for (auto& e : sys.eqs)
        if (!e.cst.is_zero()) rep.inhomogeneous = true;

    // c1 = c2 = 0 slice: homogeneous, solved by the zero candidate.
    bool homog = true;
    for (auto& e : sys.eqs)
        if (!strip_c12(e.cst).is_zero()) homog = false;
    rep.homogeneous_consistent = homog;

    LinearSystem big = prolong_order > 0 ? prolong(sys, prolong_order) : sys;
    auto res = consistency(big, true);
    rep.inconsistent = !res.consistent;
    std::vector<std::array<Rat, 3>> quads;
    for (auto& cert : res.certificates) {
        rep.residuals.push_back(print_diffpoly(cert.residual));
        for (auto& [mo, co] : cert.residual.terms)
            for (auto& [cm, r] : co.terms) {
                std::array<Rat, 3> q = {Rat(0), Rat(0), Rat(0)};
                if (cm.ce[1] == 2)
                    q[0] = r;
                else if (cm.ce[1] == 1 && cm.ce[2] == 1)
                    q[1] = r;
                else if (cm.ce[2] == 2)
                    q[2] = r;
                else
                    continue;
                quads.push_back(q);
            }
    }
    rep.forces_c_zero = rep.inconsistent && quadratics_force_zero(std::move(quads));
    return rep;
}

} // namespace pvalab
