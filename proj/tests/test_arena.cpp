#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "pvalab/diffpoly.hpp"
#include "pvalab/exprio.hpp"

using namespace pvalab;

namespace {

DiffPoly dp(const char* text) { return parse_diffpoly(text); }

std::optional<int> homogeneous_degree(const DiffPoly& f) {
    std::optional<int> deg;
    for (auto& [m, c] : f.terms) {
        int d = m.diff_order();
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

DiffPoly random_poly(std::mt19937_64& g) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g);
    };
    DiffPoly p;
    int n = pick(1, 3);
    for (int t = 0; t < n; ++t) {
        Mono m;
        m.ep = pick(-2, 2);
        m.eq = pick(-2, 2);
        int jets = pick(0, 2);
        for (int s = 0; s < jets; ++s) {
            JetVar v{static_cast<std::int16_t>(pick(0, 1)),
                     static_cast<std::int16_t>(pick(0, 2)),
                     static_cast<std::int16_t>(pick(0, 2))};
            if (v.m == 0 && v.n == 0) v.n = 1;
            Mono f;
            f.jets.push_back(JetFactor{v, static_cast<std::int16_t>(pick(1, 2))});
            m = m.times(f);
        }
        int num = pick(-4, 4);
        p.add_term(m, Coeff(Rat(num ? num : 1, pick(1, 3))));
    }
    return p;
}

} // namespace

TEST_CASE("exact rational arithmetic") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a * b == Rat(1, 18));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(10) / Rat(4) == Rat(5, 2));
}

TEST_CASE("total derivative oracles") {
    CHECK(dp("p").total_derivative(0) == dp("p[1,0]"));
    CHECK(dp("p*q[0,1]").total_derivative(0) == dp("p[1,0]*q[0,1] + p*q[1,1]"));
    CHECK(dp("q^-1").total_derivative(1) == dp("-q[0,1]*q^-2"));
}

TEST_CASE("formal partials") {
    CHECK(dp("p[1,0]^2").partial(0, 1, 0) == dp("2*p[1,0]"));
    CHECK(dp("p*q[0,1]").partial(1, 0, 0).is_zero());
    CHECK(dp("q^-2*p[0,1]").partial(1, 0, 0) == dp("-2*q^-3*p[0,1]"));
}

TEST_CASE("variational derivative oracles") {
    CHECK(dp("q").variational(1) == dp("1"));
    CHECK(dp("1/2*p[1,0]^2").variational(0) == dp("-p[2,0]"));
    CHECK(dp("p*p[0,1]").total_derivative(0).variational(0).is_zero());
}

TEST_CASE("homogeneous differential degree") {
    CHECK(homogeneous_degree(dp("p[2,1]")) == 3);
    CHECK(homogeneous_degree(dp("p*q^-1")) == 0);
    CHECK(homogeneous_degree(dp("p[1,0]*q[0,1] + q[2,0]")) == 2);
    CHECK(!homogeneous_degree(dp("p[1,0] + q[2,0]")).has_value());
}

TEST_CASE("randomized structure properties") {
    std::mt19937_64 g(0xa7e4a);
    for (int t = 0; t < 300; ++t) {
        DiffPoly f = random_poly(g), h = random_poly(g), k = random_poly(g);
        // commuting total derivatives
        CHECK(f.total_derivative(0).total_derivative(1) ==
              f.total_derivative(1).total_derivative(0));
        // derivation rule
        CHECK((f * h).total_derivative(0) ==
              f.total_derivative(0) * h + f * h.total_derivative(0));
        // Euler kernel
        CHECK(f.total_derivative(t % 2).variational(0).is_zero());
        CHECK(f.total_derivative(t % 2).variational(1).is_zero());
        // ring axioms
        CHECK((f * h) * k == f * (h * k));
        CHECK(f * (h + k) == f * h + f * k);
    }
}

TEST_CASE("degree shifts by one under total derivatives") {
    std::mt19937_64 g(0xdeb7);
    for (int t = 0; t < 200; ++t) {
        DiffPoly f = random_poly(g);
        auto d = homogeneous_degree(f);
        if (!d || f.is_zero()) continue;
        DiffPoly fx = f.total_derivative(0);
        if (fx.is_zero()) continue;
        CHECK(homogeneous_degree(fx) == *d + 1);
    }
}
