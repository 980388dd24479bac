#pragma once

#include "pvalab/lambda.hpp"

namespace pvalab {

// Evolutionary vector field with characteristics X(u^i) = X^i.
struct EvoField {
    std::array<DiffPoly, kNumComponents> X;
};

// Per component triple (i,j,k), a value in (lambda, mu).
struct TriValue {
    std::array<std::array<std::array<BiValue, kNumComponents>, kNumComponents>,
               kNumComponents>
        e;
    BiValue& operator()(int i, int j, int k) {
        return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)];
    }
    const BiValue& operator()(int i, int j, int k) const {
        return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)];
    }
    bool is_zero() const {
        for (auto& a : e)
            for (auto& b : a)
                for (auto& v : b)
                    if (!v.is_zero()) return false;
        return true;
    }
    TriValue& operator+=(const TriValue& o) {
        for (int i = 0; i < kNumComponents; ++i)
            for (int j = 0; j < kNumComponents; ++j)
                for (int k = 0; k < kNumComponents; ++k) (*this)(i, j, k) += o(i, j, k);
        return *this;
    }
    TriValue& operator-=(const TriValue& o) {
        for (int i = 0; i < kNumComponents; ++i)
            for (int j = 0; j < kNumComponents; ++j)
                for (int k = 0; k < kNumComponents; ++k) (*this)(i, j, k) -= o(i, j, k);
        return *this;
    }
};

// Prolonged action of an evolutionary field on a differential polynomial.
DiffPoly apply_field(const EvoField& x, const DiffPoly& f);

// Relabel the lambda exponents of a lambda-only value as mu exponents.
BiValue relabel_to_mu(const BiValue& v);

// Outer bracket {u^i_nu G}_B with nu = cl*lambda + cm*mu; the lambda/mu
// powers already present in G are inert formal constants.
BiValue gen_bracket(const BracketStructure& b, int i, const BiValue& g, const Rat& cl,
                    const Rat& cm);

// Middle-slot bracket {G_{lambda+mu} u^k}_B, evaluated coefficientwise with
// the (lambda+mu+d) substitution in the master formula.
BiValue middle_bracket(const BracketStructure& b, const BiValue& g, int k);

// Jacobiator of the PVA-Jacobi identity:
//   {u^i_l {u^j_m u^k}} - {u^j_m {u^i_l u^k}} - {{u^i_l u^j}_{l+m} u^k}.
TriValue jacobiator(const BracketStructure& p);

// Six-term symmetric Schouten-style bracket; schouten(P,P) = 2*jacobiator(P).
TriValue schouten(const BracketStructure& a, const BracketStructure& b);

// Differential on 1-cochains:
//   entry(i,j) = {X^i_l u^j}_P + {u^i_l X^j}_P - X({u^i_l u^j}_P).
BracketStructure d_on_field(const BracketStructure& p, const EvoField& x);

// Differential on 2-cochains (literal six-term expression; equals
// schouten(p, k), which the tests assert rather than assume).
TriValue d_on_2cochain(const BracketStructure& p, const BracketStructure& k);

} // namespace pvalab
