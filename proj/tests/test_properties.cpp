#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvalab/claims.hpp"

using namespace pvalab;

// The full 1000-case runs happen in the acceptance suite; the unit test
// replays a shorter seed-pinned prefix of every suite.
TEST_CASE("randomized property suites") {
    for (auto& name : property_suite_names()) {
        CAPTURE(name);
        auto fails = run_property_suite(name, 0xfeed, 150);
        if (!fails.empty()) { INFO(fails.front()); }
        CHECK(fails.empty());
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_property_suite("no-such-suite", 1, 1), std::invalid_argument);
}
