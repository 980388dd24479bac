#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvalab/deform.hpp"
#include "pvalab/exprio.hpp"
#include "pvalab/pvadiff.hpp"

using namespace pvalab;

TEST_CASE("jacobiator vanishes on the normal forms") {
    CHECK(jacobiator(structure_p1()).is_zero());
    CHECK(jacobiator(structure_p2()).is_zero());
    CHECK(jacobiator(structure_plp()).is_zero());
}

TEST_CASE("jacobiator detects a broken structure") {
    BracketStructure bad = structure_plp();
    bad(0, 1) += parse_bivalue("p*l1");
    bad(1, 0) += parse_bivalue("p*l1 + p[1,0]");
    CHECK(is_skew(bad));
    CHECK(!jacobiator(bad).is_zero());
}

TEST_CASE("schouten square equals twice the jacobiator") {
    for (const char* name : {"h23-p1", "p2-defo0", "p1-c3"}) {
        BracketStructure k = representative(name);
        TriValue s = schouten(k, k);
        TriValue j = jacobiator(k);
        j += jacobiator(k);
        s -= j;
        CHECK(s.is_zero());
    }
}

TEST_CASE("differential on 2-cochains agrees with the mixed Schouten bracket") {
    BracketStructure p = structure_p2();
    BracketStructure k = representative("p2-defo3");
    TriValue d = d_on_2cochain(p, k);
    TriValue s = schouten(p, k);
    d -= s;
    CHECK(d.is_zero());
}

TEST_CASE("field action and the differential on 1-cochains") {
    EvoField x;
    x.X[0] = parse_diffpoly("p[1,0]");
    x.X[1] = parse_diffpoly("q*q[0,1]");
    DiffPoly f = parse_diffpoly("p*q[0,1]");
    // prolonged action: X(p)*df/dp + X(q)_y * df/dq_y
    DiffPoly want = parse_diffpoly("p[1,0]*q[0,1] + p*(q[0,1]^2 + q*q[0,2])");
    CHECK(apply_field(x, f) == want);

    for (const char* base : {"p1", "p2", "plp"}) {
        BracketStructure p = base_structure(base);
        TriValue dd = d_on_2cochain(p, d_on_field(p, x));
        CHECK(dd.is_zero());
    }
}

TEST_CASE("coboundaries are cocycles for the parametric generator") {
    BracketStructure p = structure_p1();
    BracketStructure cb = d_on_field(p, parametric_miura_field());
    CHECK(is_skew(cb));
    CHECK(d_on_2cochain(p, cb).is_zero());
}
