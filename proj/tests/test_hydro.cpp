#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvalab/deform.hpp"
#include "pvalab/exprio.hpp"
#include "pvalab/hydro.hpp"

using namespace pvalab;

TEST_CASE("hydrodynamic data reproduces the lambda-bracket displays") {
    struct Entry {
        HydroStructure h;
        const char* base;
    };
    for (Entry e : {Entry{hydro_p1(), "p1"}, Entry{hydro_p2(), "p2"},
                    Entry{hydro_plp(), "plp"}}) {
        BracketStructure got = to_lambda(e.h);
        BracketStructure want = base_structure(e.base);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK((got(i, j) - want(i, j)).is_zero());
    }
}

TEST_CASE("compatibility conditions hold for the three normal forms") {
    CHECK(mokhov_check(hydro_p1()).all_ok());
    CHECK(mokhov_check(hydro_p2()).all_ok());
    CHECK(mokhov_check(hydro_plp()).all_ok());
}

TEST_CASE("axis-swapped connection breaks metric compatibility") {
    HydroStructure s = hydro_plp();
    std::swap(s.b[0], s.b[1]);
    MokhovReport rep = mokhov_check(s);
    CHECK(!rep.ok[1]); // derivative-of-metric condition
    CHECK(!rep.ok[3]); // cyclic sum
    CHECK(!rep.residuals.empty());
}

TEST_CASE("obstruction tensors") {
    for (auto& h : {hydro_p1(), hydro_p2()}) {
        ObstructionReport rep = obstruction_tensors(h);
        CHECK(rep.all_ok());
        for (auto& a : rep.t_up)
            for (auto& b : a)
                for (auto& c : b)
                    for (auto& d : c)
                        for (auto& v : d) CHECK(v.is_zero());
    }
    CHECK(obstruction_tensors(hydro_plp()).all_ok());
}
