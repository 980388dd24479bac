#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pvalab/deform.hpp"
#include "pvalab/exprio.hpp"
#include "pvalab/pvadiff.hpp"

using namespace pvalab;

TEST_CASE("ansatz coefficient counts") {
    CHECK(build_ansatz(3).slots.size() == 172);
    CHECK(build_ansatz(5).slots.size() == 1774);
}

TEST_CASE("ansatz brackets are skew for random slot values") {
    Ansatz ans = build_ansatz3();
    std::mt19937_64 g(0x5109);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g);
    };
    for (int t = 0; t < 20; ++t) {
        std::map<std::string, DiffPoly> values;
        for (int s = 0; s < 5; ++s) {
            Mono m;
            m.ep = pick(-1, 2);
            m.eq = pick(-1, 2);
            DiffPoly v;
            v.add_term(m, Coeff(Rat(pick(-3, 3))));
            values[ans.slots[static_cast<std::size_t>(
                pick(0, static_cast<int>(ans.slots.size()) - 1))]] = v;
        }
        CHECK(is_skew(ans.bracket_from(values)));
    }
}

TEST_CASE("catalog representatives are skew and homogeneous of the expected degree") {
    // the pure hydrodynamic brackets have degree 1; all deformation
    // representatives have degree 3
    for (auto& name : representative_names()) {
        BracketStructure k = representative(name);
        CHECK(is_skew(k));
        int expected = (name == "p1" || name == "p2" || name == "plp") ? 1 : 3;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (auto& [lk, coef] : k(i, j).terms)
                    for (auto& [m, c] : coef.terms)
                        CHECK(lk.l1 + lk.l2 + lk.m1 + lk.m2 + m.diff_order() == expected);
    }
}

TEST_CASE("the diagonal-base representative is a nontrivial cocycle of rank 4") {
    auto cert = certify_nontrivial("p1", representative("h23-p1"), 4);
    CHECK(cert.ok());
    CHECK(cert.cocycle);
    CHECK(cert.functionals_vanish_on_coboundaries);
    CHECK(cert.rank == 4);
    REQUIRE(cert.functional_values.size() == 4);
    CHECK(cert.functional_values[0] == parse_diffpoly("-3*c1"));
    CHECK(cert.functional_values[1] == parse_diffpoly("-3*c2"));
    CHECK(cert.functional_values[2] == parse_diffpoly("c1*p + 1/2*c3"));
    CHECK(cert.functional_values[3] == parse_diffpoly("c2*q + 1/2*c4"));
}

TEST_CASE("the second-base representative has functional values b0..b4") {
    BracketStructure k = representative("h23-p2");
    CHECK(d_on_2cochain(structure_p2(), k).is_zero());
    auto slots = extract_coefficients(k);
    auto funcs = coboundary_functionals("p2");
    REQUIRE(funcs.size() == 5);
    CHECK(eval_functional(funcs[0], slots) == parse_diffpoly("c0 + 1/3*(c1 - 2*c2)*p"));
    CHECK(eval_functional(funcs[1], slots) == parse_diffpoly("c1"));
    CHECK(eval_functional(funcs[2], slots) == parse_diffpoly("c2"));
    CHECK(eval_functional(funcs[3], slots) == parse_diffpoly("c3"));
    CHECK(eval_functional(funcs[4], slots) == parse_diffpoly("c4"));
}

TEST_CASE("setting constants specializes the family") {
    BracketStructure k = representative("h23-p1");
    BracketStructure only3 = set_constants(k, {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
    BracketStructure direct = representative("p1-c3");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK((only3(i, j) - direct(i, j)).is_zero());
}

TEST_CASE("extract-coefficients round-trip and gauge rejection") {
    Ansatz ans = build_ansatz3();
    std::map<std::string, DiffPoly> values;
    values[ans.slots[0]] = parse_diffpoly("p*q");
    values[ans.slots[10]] = parse_diffpoly("3");
    auto got = extract_coefficients(ans.bracket_from(values));
    for (auto it = got.begin(); it != got.end();)
        it = it->second.is_zero() ? got.erase(it) : std::next(it);
    CHECK(got == values);

    BracketStructure off = representative("h23-p1");
    off(0, 0) += parse_bivalue("l1^4"); // degree 4: outside the gauge image
    CHECK_THROWS_AS(extract_coefficients(off), GaugeError);
}

TEST_CASE("hamiltonian flows") {
    auto f = hamiltonian_flow(representative("p2-defo3"), parse_diffpoly("q"));
    CHECK(f[0].is_zero());
    CHECK(f[1] == parse_diffpoly("-2*p[0,3]"));

    BracketStructure p2 = structure_p2();
    for (const char* h : {"p", "q"}) {
        auto c = hamiltonian_flow(p2, parse_diffpoly(h));
        CHECK(c[0].is_zero());
        CHECK(c[1].is_zero());
    }

    auto g = hamiltonian_flow(structure_p1(), parse_diffpoly("1/2*p^2"));
    CHECK(g[0] == parse_diffpoly("p[1,0]"));
    CHECK(g[1].is_zero());
}

TEST_CASE("cohomology dimension rows") {
    CHECK(cohomology_dims(1, 10) ==
          std::vector<long long>{2, 0, 2, 0, 2, 0, 2, 0, 2, 0});
    CHECK(cohomology_dims(2, 10) ==
          std::vector<long long>{2, 0, 4, 0, 4, 2, 4, 2, 6, 2});
    CHECK(cohomology_dims(3, 10) ==
          std::vector<long long>{0, 0, 2, 0, 2, 4, 2, 4, 6, 6});
    // agreement with the certified rank at level 2, degree 3
    CHECK(cohomology_dims(2, 3)[2] == 4);
}
