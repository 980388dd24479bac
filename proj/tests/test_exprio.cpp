#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pvalab/deform.hpp"
#include "pvalab/exprio.hpp"

using namespace pvalab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

DiffPoly random_poly(std::mt19937_64& g) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g);
    };
    DiffPoly p;
    int n = pick(1, 4);
    for (int t = 0; t < n; ++t) {
        Mono m;
        m.ep = pick(-2, 2);
        m.eq = pick(-2, 2);
        if (pick(0, 1)) {
            JetVar v{static_cast<std::int16_t>(pick(0, 1)),
                     static_cast<std::int16_t>(pick(0, 2)),
                     static_cast<std::int16_t>(pick(0, 2))};
            if (v.m == 0 && v.n == 0) v.m = 1;
            m.jets.push_back(JetFactor{v, static_cast<std::int16_t>(pick(1, 3))});
        }
        Coeff c(Rat(pick(-5, 5) * 2 + 1, pick(1, 4)));
        if (pick(0, 2) == 0) c = c * Coeff::constant(pick(0, 4));
        p.add_term(m, c);
    }
    return p;
}

} // namespace

TEST_CASE("parse and lower simple expressions") {
    CHECK(parse_diffpoly("p") == DiffPoly::jet(0, 0, 0));
    CHECK(parse_diffpoly("2*p - p") == DiffPoly::jet(0, 0, 0));
    CHECK(parse_diffpoly("p^2*q^-1 + q[0,3]") ==
          DiffPoly::jet(0, 0, 0, 2) * DiffPoly::jet(1, 0, 0, -1) + DiffPoly::jet(1, 0, 3));
    BiValue v = parse_bivalue("p*l1^2 + q*m2");
    CHECK(v.coefficient(2, 0) == parse_diffpoly("p"));
    CHECK(v.coefficient(0, 0, 0, 1) == parse_diffpoly("q"));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_diffpoly("p +"), ParseError);
    CHECK_THROWS_AS(parse_diffpoly("p[1]"), ParseError);
    CHECK_THROWS_AS(parse_diffpoly("unknown"), ParseError);
    // lambda atoms are rejected when lowering to a plain DiffPoly
    CHECK_THROWS(parse_diffpoly("l1*p"));
}

TEST_CASE("print-parse round-trip on randomized polynomials") {
    std::mt19937_64 g(0x9a11e7);
    for (int t = 0; t < 1000; ++t) {
        DiffPoly p = random_poly(g);
        CHECK(parse_diffpoly(print_diffpoly(p)) == p);
    }
}

TEST_CASE("bracket data files load and print idempotently") {
    for (const char* name : {"h23-p1.bracket", "h23-p2-display.bracket",
                             "h23-plp-1.bracket", "h23-plp-2.bracket"}) {
        std::string text = slurp(data_dir() + "/" + name);
        BracketStructure b = parse_bracket_file(text);
        std::string once = print_bracket_file(b);
        CHECK(print_bracket_file(parse_bracket_file(once)) == once);
    }
}

TEST_CASE("claim report schema") {
    ClaimResult r;
    r.claim_id = "demo";
    r.paper_anchor = "demo anchor";
    r.status = "pass";
    r.witness = "0 = 0";
    r.runtime_ms = 1;
    std::string doc = report({r});
    CHECK(doc.find("\"schema\": \"pva-lab/1\"") != std::string::npos);
    CHECK(doc.find("\"claim_id\": \"demo\"") != std::string::npos);
    CHECK(doc.find("\"status\": \"pass\"") != std::string::npos);
}
