#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pvalab/pvadiff.hpp"

namespace pvalab {

// One unknown-function occurrence: an interned symbol together with its
// (p,q)-derivative multi-index.
struct UKey {
    std::int32_t sym = -1;
    std::uint8_t dp = 0, dq = 0;
    auto operator<=>(const UKey&) const = default;
};

std::string ukey_name(const UKey& k);

// Affine-linear form sum_j r_j(p,q) * u_j + r_0(p,q). The coefficients are
// jet-free DiffPolys (Laurent in p,q, possibly with the formal constants).
struct LinForm {
    std::map<UKey, DiffPoly> lin;
    DiffPoly cst;

    bool is_zero() const { return lin.empty() && cst.is_zero(); }
    void add_lin(const UKey& k, const DiffPoly& c) {
        if (c.is_zero()) return;
        auto [it, ins] = lin.emplace(k, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) lin.erase(it);
        }
    }
    LinForm& operator+=(const LinForm& o) {
        for (auto& [k, c] : o.lin) add_lin(k, c);
        cst += o.cst;
        return *this;
    }
    LinForm& operator-=(const LinForm& o) {
        for (auto& [k, c] : o.lin) add_lin(k, -c);
        cst -= o.cst;
        return *this;
    }
    // derivative with respect to p (comp 0) or q (comp 1), chain rule raising
    // the derivative multi-index of each unknown
    LinForm derivative(int comp) const;
};

std::string print_linform(const LinForm& f);

struct LinearSystem {
    std::vector<LinForm> eqs;
    std::set<UKey> unknowns;

    void add(LinForm f) {
        if (f.is_zero()) return;
        for (auto& [k, c] : f.lin) unknowns.insert(k);
        eqs.push_back(std::move(f));
    }
    std::size_t size() const { return eqs.size(); }
};

// Split the coefficient of a parametric DiffPoly into linear forms, one per
// jet monomial; the Laurent (p,q) part stays inside the coefficients.
void collect_into(const DiffPoly& value, std::map<std::vector<JetFactor>, LinForm>& out);

LinearSystem collect(const BiValue& v);
LinearSystem collect(const BracketStructure& b);
LinearSystem collect(const TriValue& t);

// Original equations plus all (p,q)-derivatives up to total order k.
LinearSystem prolong(const LinearSystem& sys, int k);

struct Certificate {
    // reduced row with no unknowns but nonzero constant, plus the
    // combination of input rows that produces it
    DiffPoly residual;
    std::map<std::size_t, DiffPoly> combination;
};

struct ConsistencyResult {
    bool consistent = true;
    std::size_t rank = 0; // pivots found during elimination
    std::vector<Certificate> certificates;
};

// Fraction-free elimination over the Laurent-coefficient forms. When
// track_certificates is set, each inconsistent row carries the exact linear
// combination of input equations producing it.
ConsistencyResult consistency(const LinearSystem& sys, bool track_certificates = false);

// Substitute explicit values (functions of p,q) for the unknown symbols;
// derivative keys receive the corresponding p/q-derivatives of the value.
DiffPoly substitute(const LinForm& f, const std::map<std::int32_t, DiffPoly>& values);
bool satisfied_by(const LinearSystem& sys, const std::map<std::int32_t, DiffPoly>& values);

// Instantiate each unknown function as a Laurent polynomial with monomials
// p^a q^b, pmin <= a <= pmax, qmin <= b <= qmax, and solve the resulting
// scalar linear system exactly. Returns the affine solution dimension, or
// nullopt if the system is infeasible in the window.
struct BoundedSolution {
    std::optional<std::size_t> dimension; // nullopt = infeasible
    std::size_t scalar_unknowns = 0;
    std::size_t rank = 0;
};
BoundedSolution solve_bounded(const LinearSystem& sys, int pmin, int pmax, int qmin,
                              int qmax);

// Exact rank of a rational matrix.
std::size_t rational_rank(std::vector<std::vector<Rat>> m);

// Rank of a family of values, viewed as linear forms in the formal constants
// with Laurent-monomial coefficients.
std::size_t rank_over_constants(const std::vector<DiffPoly>& values);

} // namespace pvalab
