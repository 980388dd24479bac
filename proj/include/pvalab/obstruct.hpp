#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvalab/deform.hpp"
#include "pvalab/linsys.hpp"

namespace pvalab {

// Square bracket [K, K] of a degree-3 structure carrying formal constants.
TriValue square_bracket(const BracketStructure& rep);

// Which c_a c_b monomials (a <= b, exponents summing to 2) appear.
std::set<std::pair<int, int>> square_fingerprint(const TriValue& t);

// Extension problem 2[P0, K5] + [K3, K3] = 0 for a named base. The degree-5
// candidate is the restricted ansatz (at most one jet factor per slot), which
// carries every term that can land on a jet-free pure (lambda, mu) monomial.
struct ExtensionProblem {
    std::string base;
    BracketStructure p0;
    BracketStructure infinitesimal; // generic degree-3 representative
    Ansatz candidate;               // restricted degree-5 ansatz
    TriValue base_image;            // 2[P0, candidate.bracket()]
    TriValue source;                // [infinitesimal, infinitesimal]
};
ExtensionProblem make_extension_problem(const std::string& base);

// The (i,j,k)-component coefficient of the target (lambda, mu) monomial of
// the extension expression, split into the part linear in the candidate
// unknowns (jet-free part) and the c-bilinear source.
struct WitnessResult {
    LinForm base_contribution;
    DiffPoly source;
};
WitnessResult witness_coefficient(const ExtensionProblem& prob, int i, int j, int k,
                                  const LKey& target);

struct CheckLine {
    std::string name;
    bool pass = false;
};
struct BiHamiltonianReport {
    std::vector<CheckLine> checks;
    bool ok() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};
// Bi-Hamiltonian checks for the parameter lines on which the square bracket
// vanishes: the (c3, c4) line over the first diagonal base and the (c3) and
// (c0, c4) lines over the second base.
BiHamiltonianReport bihamiltonian_check();

// All jet-free pure (lambda, mu) coefficient equations of the extension
// expression C = 2[P0, K5] + [K3, K3].
LinearSystem extension_subsystem(const ExtensionProblem& prob);

// The same system for the third base with generic (c1, c2).
LinearSystem plp_subsystem();

struct PlpObstructionReport {
    std::size_t equations = 0;
    bool inhomogeneous = false;
    int prolong_order = 0;
    bool inconsistent = false;          // certificate found at this order
    bool forces_c_zero = false;         // residuals force c1 = c2 = 0
    bool homogeneous_consistent = false; // c1 = c2 = 0 slice is consistent
    std::vector<std::string> residuals;
    bool inconclusive() const { return !inconsistent; }
};
// Bounded-prolongation consistency analysis of plp_subsystem().
PlpObstructionReport plp_obstruction(int prolong_order);

} // namespace pvalab
