#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvalab/linsys.hpp"

namespace pvalab {

struct GaugeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One product in the gauge-fixed M matrix: factor * slot(p,q) * lambda^lam *
// jet monomial, placed at entry (i,j).
struct AnsatzTerm {
    std::string slot;
    std::int32_t sym;
    int i, j;
    LKey lam;
    Mono jets;
    Rat factor;
};

struct Ansatz {
    std::vector<AnsatzTerm> terms;
    std::vector<std::string> slots; // independent slot names, sorted
    int degree = 0;

    BracketStructure matrix() const;  // M with unknown-function slots
    BracketStructure bracket() const; // skew_build(M)
    BracketStructure matrix_from(const std::map<std::string, DiffPoly>& values) const;
    BracketStructure bracket_from(const std::map<std::string, DiffPoly>& values) const;
};

// Degree-3 family ansatz (seven-letter symmetry gauge); 172 slots.
Ansatz build_ansatz3();
// Generic degree-5 ansatz; 1774 slots. max_jet_factors >= 0 restricts the jet
// monomials of M to at most that many jet-variable occurrences (counted with
// multiplicity); -1 means unrestricted.
Ansatz build_ansatz5(int max_jet_factors = -1);
Ansatz build_ansatz(int degree);

// Read the degree-3 family coefficients back from a skewsymmetric degree-3
// bracket. Throws GaugeError when the bracket is not in the gauge's image.
std::map<std::string, DiffPoly> extract_coefficients(const BracketStructure& k);

// Substitute numeric values for (some of) the formal constants c0..c4.
BiValue set_constants(const BiValue& v, const std::array<std::optional<Rat>, 5>& vals);
BracketStructure set_constants(const BracketStructure& b,
                               const std::array<std::optional<Rat>, 5>& vals);

// Catalog of named representatives.
BracketStructure representative(const std::string& name);
std::vector<std::string> representative_names();

// Named linear functionals on extracted degree-3 coefficients.
struct FuncTerm {
    DiffPoly pre;
    std::string slot;
    int dp = 0, dq = 0;
};
struct Functional {
    std::string name;
    std::vector<FuncTerm> terms;
};
std::vector<Functional> coboundary_functionals(const std::string& base);
DiffPoly eval_functional(const Functional& f,
                         const std::map<std::string, DiffPoly>& slots);

// Fully parametric degree-2 Miura generator (unknown functions of (p,q)).
EvoField parametric_miura_field();

struct NontrivialityCertificate {
    bool cocycle = false;
    bool functionals_vanish_on_coboundaries = false;
    std::size_t rank = 0;
    std::vector<std::string> functional_names;
    std::vector<DiffPoly> functional_values;
    std::string failure; // empty on success
    bool ok() const { return failure.empty(); }
};
NontrivialityCertificate certify_nontrivial(const std::string& base,
                                            const BracketStructure& rep,
                                            std::size_t expected_rank);

// Evolution equations u^i_t from density h.
std::array<DiffPoly, 2> hamiltonian_flow(const BracketStructure& p, const DiffPoly& h);

// dim H^p_d for d = 1..dmax from the generating function 2(h^p + h^{p+1}).
std::vector<long long> cohomology_dims(int p, int dmax);

// Base bracket by name "p1" | "p2" | "plp".
BracketStructure base_structure(const std::string& name);

} // namespace pvalab
