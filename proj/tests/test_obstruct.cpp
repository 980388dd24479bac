#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvalab/exprio.hpp"
#include "pvalab/obstruct.hpp"

using namespace pvalab;

TEST_CASE("square fingerprints of the three families") {
    using Fp = std::set<std::pair<int, int>>;
    CHECK(square_fingerprint(square_bracket(representative("h23-p1"))) ==
          Fp{{1, 1}, {1, 3}, {2, 2}, {2, 4}});
    CHECK(square_fingerprint(square_bracket(representative("h23-plp"))) ==
          Fp{{1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("square of a single-parameter member vanishes where expected") {
    // the (c3, c4) line over the diagonal base squares to zero
    BracketStructure k =
        set_constants(representative("h23-p1"), {Rat(0), Rat(0), Rat(0), {}, {}});
    CHECK(square_bracket(k).is_zero());
}

TEST_CASE("compatible pencil checks") {
    BiHamiltonianReport rep = bihamiltonian_check();
    CHECK(rep.checks.size() == 8);
    for (auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(rep.ok());
}

TEST_CASE("witness coefficients over the diagonal base") {
    ExtensionProblem prob = make_extension_problem("p1");
    CHECK(prob.candidate.slots.size() == 206);

    WitnessResult w = witness_coefficient(prob, 1, 1, 1, LKey{5, 0, 1, 0});
    CHECK(w.base_contribution.is_zero());
    CHECK(w.source == parse_diffpoly("6*c2*c4 + 12*c2^2*q"));

    WitnessResult w2 = witness_coefficient(prob, 0, 0, 0, LKey{0, 5, 0, 1});
    CHECK(w2.base_contribution.is_zero());
    CHECK(w2.source == parse_diffpoly("6*c1*c3 + 12*c1^2*p"));

    // targets beyond total degree 6 cannot occur in the extension expression
    CHECK_THROWS_AS(witness_coefficient(prob, 0, 0, 0, LKey{7, 0, 1, 0}),
                    std::invalid_argument);
}
