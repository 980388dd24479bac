#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>

#include "pvalab/diffpoly.hpp"

namespace pvalab {

// Exponents of lambda_1, lambda_2, mu_1, mu_2.
struct LKey {
    std::int16_t l1 = 0, l2 = 0, m1 = 0, m2 = 0;
    auto operator<=>(const LKey&) const = default;
};

// Polynomial in lambda_1, lambda_2, mu_1, mu_2 with DiffPoly coefficients.
// Single-variable lambda-polynomials are the special case m1 = m2 = 0.
class BiValue {
public:
    std::map<LKey, DiffPoly> terms;

    BiValue() = default;
    explicit BiValue(const DiffPoly& p) {
        if (!p.is_zero()) terms.emplace(LKey{}, p);
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const BiValue& o) const { return terms == o.terms; }

    void add_term(const LKey& k, const DiffPoly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms.emplace(k, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    BiValue& operator+=(const BiValue& o) {
        for (auto& [k, p] : o.terms) add_term(k, p);
        return *this;
    }
    BiValue& operator-=(const BiValue& o) {
        for (auto& [k, p] : o.terms) add_term(k, -p);
        return *this;
    }
    friend BiValue operator+(BiValue a, const BiValue& b) { return a += b; }
    friend BiValue operator-(BiValue a, const BiValue& b) { return a -= b; }
    BiValue operator-() const {
        BiValue r;
        for (auto& [k, p] : terms) r.terms.emplace(k, -p);
        return r;
    }

    friend BiValue operator*(const BiValue& a, const BiValue& b) {
        BiValue r;
        for (auto& [ka, pa] : a.terms)
            for (auto& [kb, pb] : b.terms) {
                LKey k{static_cast<std::int16_t>(ka.l1 + kb.l1),
                       static_cast<std::int16_t>(ka.l2 + kb.l2),
                       static_cast<std::int16_t>(ka.m1 + kb.m1),
                       static_cast<std::int16_t>(ka.m2 + kb.m2)};
                r.add_term(k, pa * pb);
            }
        return r;
    }
    BiValue& operator*=(const Rat& s) {
        if (s == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, p] : terms) p *= s;
        return *this;
    }
    friend BiValue operator*(BiValue a, const Rat& s) { return a *= s; }
    friend BiValue operator*(const Rat& s, BiValue a) { return a *= s; }
    friend BiValue operator*(const DiffPoly& p, BiValue a) {
        BiValue r;
        for (auto& [k, q] : a.terms) r.add_term(k, p * q);
        return r;
    }
    friend BiValue operator*(BiValue a, const DiffPoly& p) {
        BiValue r;
        for (auto& [k, q] : a.terms) r.add_term(k, q * p);
        return r;
    }
    friend BiValue operator*(BiValue a, const Coeff& c) {
        BiValue r;
        for (auto& [k, q] : a.terms) r.add_term(k, q * c);
        return r;
    }

    // Multiply by lambda_axis (muvar == false) or mu_axis (muvar == true).
    BiValue mul_var(int axis, bool muvar = false, int pow = 1) const {
        BiValue r;
        for (auto& [k, p] : terms) {
            LKey nk = k;
            if (!muvar)
                (axis == 0 ? nk.l1 : nk.l2) =
                    static_cast<std::int16_t>((axis == 0 ? k.l1 : k.l2) + pow);
            else
                (axis == 0 ? nk.m1 : nk.m2) =
                    static_cast<std::int16_t>((axis == 0 ? k.m1 : k.m2) + pow);
            r.terms.emplace(nk, p);
        }
        return r;
    }

    // Total derivative acting on the DiffPoly coefficients only.
    BiValue total_derivative(int axis) const {
        BiValue r;
        for (auto& [k, p] : terms) r.add_term(k, p.total_derivative(axis));
        return r;
    }

    // Coefficient of lambda^(a1,a2) mu^(b1,b2).
    DiffPoly coefficient(int a1, int a2, int b1 = 0, int b2 = 0) const {
        LKey k{static_cast<std::int16_t>(a1), static_cast<std::int16_t>(a2),
               static_cast<std::int16_t>(b1), static_cast<std::int16_t>(b2)};
        auto it = terms.find(k);
        return it == terms.end() ? DiffPoly() : it->second;
    }

    bool has_mu() const {
        for (auto& [k, p] : terms)
            if (k.m1 || k.m2) return true;
        return false;
    }
    bool has_unknown() const {
        for (auto& [k, p] : terms)
            if (p.has_unknown()) return true;
        return false;
    }
};

// One application of the operator (cl*lambda_axis + cm*mu_axis + cd*d_axis).
inline BiValue shift_once(const BiValue& v, int axis, const Rat& cl, const Rat& cm,
                          const Rat& cd) {
    BiValue r;
    if (cl != 0) r += v.mul_var(axis, false) * cl;
    if (cm != 0) r += v.mul_var(axis, true) * cm;
    if (cd != 0) r += v.total_derivative(axis) * cd;
    return r;
}

// (cl*lambda + cm*mu + cd*d)^(s1,s2), componentwise per axis.
inline BiValue shift_pow(BiValue v, int s1, int s2, const Rat& cl, const Rat& cm,
                         const Rat& cd) {
    for (int i = 0; i < s1; ++i) v = shift_once(v, 0, cl, cm, cd);
    for (int i = 0; i < s2; ++i) v = shift_once(v, 1, cl, cm, cd);
    return v;
}

// Bracket structure on the generators: entry(i, j) is {u^i_lambda u^j},
// a lambda-polynomial (no mu part expected).
struct BracketStructure {
    std::array<std::array<BiValue, kNumComponents>, kNumComponents> e;

    BiValue& operator()(int i, int j) {
        return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const BiValue& operator()(int i, int j) const {
        return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    bool has_unknown() const {
        for (int i = 0; i < kNumComponents; ++i)
            for (int j = 0; j < kNumComponents; ++j)
                if (e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].has_unknown())
                    return true;
        return false;
    }
};

// {u^i_{nu+d} u^j} acting on rhs, where nu = cl*lambda + cm*mu. Each term
// lambda^S h_S of the structure entry contributes h_S * (nu+d)^S rhs.
inline BiValue bracket_on(const BiValue& entry, const BiValue& rhs, const Rat& cl,
                          const Rat& cm) {
    BiValue out;
    for (auto& [k, h] : entry.terms) {
        BiValue shifted = shift_pow(rhs, k.l1, k.l2, cl, cm, Rat(1));
        out += h * shifted;
    }
    return out;
}

// Master formula: {f_nu g} with nu = cl*lambda + cm*mu.
//   {f_nu g} = sum_{i,j,L,M} dg/du^j_M (nu+d)^M [ {u^i_{nu+d} u^j}
//                                   (-nu-d)^L df/du^i_L ]
inline BiValue master_bracket_gen(const BracketStructure& B, const DiffPoly& f,
                                  const DiffPoly& g, const Rat& cl, const Rat& cm) {
    BiValue out;
    auto fdeps = f.dependencies();
    auto gdeps = g.dependencies();
    fdeps.insert(JetVar{0, 0, 0});
    fdeps.insert(JetVar{1, 0, 0});
    gdeps.insert(JetVar{0, 0, 0});
    gdeps.insert(JetVar{1, 0, 0});
    for (int i = 0; i < kNumComponents; ++i) {
        for (auto& L : fdeps) {
            if (L.comp != i) continue;
            DiffPoly fL = f.partial(i, L.m, L.n);
            if (fL.is_zero()) continue;
            BiValue baseL = shift_pow(BiValue(fL), L.m, L.n, -cl, -cm, Rat(-1));
            for (int j = 0; j < kNumComponents; ++j) {
            if (B(i, j).is_zero()) continue;
                BiValue inner = bracket_on(B(i, j), baseL, cl, cm);
                if (inner.is_zero()) continue;
                for (auto& M : gdeps) {
                    if (M.comp != j) continue;
                    DiffPoly gM = g.partial(j, M.m, M.n);
                    if (gM.is_zero()) continue;
                    BiValue shifted = shift_pow(inner, M.m, M.n, cl, cm, Rat(1));
                    out += gM * shifted;
                }
            }
        }
    }
    return out;
}

inline BiValue master_bracket(const BracketStructure& B, const DiffPoly& f,
                              const DiffPoly& g) {
    return master_bracket_gen(B, f, g, Rat(1), Rat(0));
}

// Formal adjoint: for M = sum_S lambda^S M_S, M* = sum_S (-lambda-d)^S M_S.
// Input must be lambda-only.
inline BiValue adjoint_star(const BiValue& m) {
    BiValue out;
    for (auto& [k, h] : m.terms) {
        BiValue base{h};
        out += shift_pow(base, k.l1, k.l2, Rat(-1), Rat(0), Rat(-1));
    }
    return out;
}

// Skew completion: K(i,j) = M(i,j) - M(j,i)*.
inline BracketStructure skew_build(const BracketStructure& m) {
    BracketStructure k;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j) k(i, j) = m(i, j) - adjoint_star(m(j, i));
    return k;
}

// Skewsymmetry residuals: residual(i,j) = {u^j_lambda u^i} + {u^i_lambda u^j}*.
inline BracketStructure skew_check(const BracketStructure& b) {
    BracketStructure r;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j) r(i, j) = b(j, i) + adjoint_star(b(i, j));
    return r;
}

inline bool is_skew(const BracketStructure& b) {
    BracketStructure r = skew_check(b);
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            if (!r(i, j).is_zero()) return false;
    return true;
}

// The three normal-form structures and helpers to build entries.
BracketStructure structure_p1();    // diag(lambda_1, lambda_2)
BracketStructure structure_p2();    // [[0, l1], [l1, l2]]
BracketStructure structure_plp();   // the hydrodynamic pencil member

} // namespace pvalab
