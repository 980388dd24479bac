#pragma once

#include <string>
#include <vector>

#include "pvalab/lambda.hpp"

namespace pvalab {

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hydrodynamic-type structure: per axis alpha, a metric g^{alpha ij} and
// connection coefficients b^{alpha ij}_k, all Laurent polynomials in (p,q).
struct HydroStructure {
    // g[alpha][i][j], b[alpha][i][j][k]
    std::array<std::array<std::array<DiffPoly, 2>, 2>, 2> g;
    std::array<std::array<std::array<std::array<DiffPoly, 2>, 2>, 2>, 2> b;
};

HydroStructure hydro_p1();
HydroStructure hydro_p2();
HydroStructure hydro_plp();

// {u^i_l u^j} = sum_alpha (g^{alpha ji} lambda_alpha + b^{alpha ji}_k u^k_alpha).
BracketStructure to_lambda(const HydroStructure& h);

// Residuals of the seven compatibility-condition families. Empty <=> the
// structure defines a Poisson bracket of hydrodynamic type.
struct MokhovReport {
    std::array<bool, 7> ok{};
    std::vector<std::string> residuals; // "M<n>[indices] = <expr>" for nonzero ones
    bool all_ok() const {
        for (bool v : ok)
            if (!v) return false;
        return true;
    }
};
MokhovReport mokhov_check(const HydroStructure& h);

// Christoffel symbols, obstruction tensors and the residuals of the four
// compatibility conditions (a)-(d) they must satisfy.
struct ObstructionReport {
    // gamma[alpha][i][j][k] = Gamma^{alpha k}_{ij} = -g^alpha_{is} b^{alpha sk}_j
    std::array<std::array<std::array<std::array<DiffPoly, 2>, 2>, 2>, 2> gamma;
    // t_low[alpha][beta][i][j][k] = T^{alphabeta i}_{jk}
    DiffPoly t_low[2][2][2][2][2];
    // t_up[alpha][beta][i][j][k] = T^{alphabeta ijk}
    DiffPoly t_up[2][2][2][2][2];
    std::array<bool, 4> ok{};
    std::vector<std::string> residuals;
    bool all_ok() const {
        for (bool v : ok)
            if (!v) return false;
        return true;
    }
};
ObstructionReport obstruction_tensors(const HydroStructure& h);

} // namespace pvalab
