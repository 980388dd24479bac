#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "pvalab/rational.hpp"
#include "pvalab/symtab.hpp"

namespace pvalab {

inline constexpr int kNumConstants = 5; // formal constants c0..c4

// Thrown when an operation would create a term of degree >= 2 in the
// unknown-function symbols. The parametric layer is affine-linear by
// construction; anything nonlinear is a usage error.
struct NonlinearError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One scalar monomial: a power product of the formal constants c0..c4,
// optionally times a single unknown-function symbol U^(dp,dq) (the
// (dp,dq)-th derivative of U with respect to the zero jets p,q).
struct CMono {
    std::array<std::uint8_t, kNumConstants> ce{};
    std::int32_t sym = -1; // -1: no unknown factor
    std::uint8_t dp = 0, dq = 0;

    bool has_unknown() const { return sym >= 0; }
    bool is_one() const {
        if (sym >= 0) return false;
        for (auto e : ce)
            if (e) return false;
        return true;
    }
    auto operator<=>(const CMono&) const = default;
};

// Scalar coefficient: polynomial in c0..c4 over the rationals, plus an
// affine-linear part in the unknown symbols with such polynomials as
// coefficients. Canonical form: no zero entries stored.
class Coeff {
public:
    std::map<CMono, Rat> terms;

    Coeff() = default;
    explicit Coeff(const Rat& r) {
        if (r != 0) terms.emplace(CMono{}, r);
    }
    static Coeff constant(int k, int pow = 1) {
        Coeff c;
        CMono m;
        m.ce[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(pow);
        c.terms.emplace(m, Rat(1));
        return c;
    }
    static Coeff unknown(std::int32_t sym, int dp = 0, int dq = 0) {
        Coeff c;
        CMono m;
        m.sym = sym;
        m.dp = static_cast<std::uint8_t>(dp);
        m.dq = static_cast<std::uint8_t>(dq);
        c.terms.emplace(m, Rat(1));
        return c;
    }

    bool is_zero() const { return terms.empty(); }
    bool has_unknown() const {
        for (auto& [m, r] : terms)
            if (m.has_unknown()) return true;
        return false;
    }
    // True iff the value is a plain rational (possibly zero).
    bool is_rational() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one());
    }
    Rat rational_value() const {
        if (terms.empty()) return Rat(0);
        if (!is_rational()) throw std::logic_error("Coeff: not a plain rational");
        return terms.begin()->second;
    }

    void add_term(const CMono& m, const Rat& r) {
        if (r == 0) return;
        auto [it, inserted] = terms.emplace(m, r);
        if (!inserted) {
            it->second += r;
            if (it->second == 0) terms.erase(it);
        }
    }

    Coeff& operator+=(const Coeff& o) {
        for (auto& [m, r] : o.terms) add_term(m, r);
        return *this;
    }
    Coeff& operator-=(const Coeff& o) {
        for (auto& [m, r] : o.terms) add_term(m, -r);
        return *this;
    }
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    Coeff operator-() const {
        Coeff r;
        for (auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }

    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        Coeff r;
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) {
                CMono m;
                for (int i = 0; i < kNumConstants; ++i)
                    m.ce[static_cast<std::size_t>(i)] =
                        static_cast<std::uint8_t>(ma.ce[static_cast<std::size_t>(i)] +
                                                  mb.ce[static_cast<std::size_t>(i)]);
                if (ma.has_unknown() && mb.has_unknown())
                    throw NonlinearError("product of two unknown-function symbols: " +
                                         symbol_name(ma.sym) + " * " + symbol_name(mb.sym));
                const CMono& u = ma.has_unknown() ? ma : mb;
                m.sym = u.sym;
                m.dp = u.dp;
                m.dq = u.dq;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
    Coeff& operator*=(const Rat& s) {
        if (s == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [m, r] : terms) r *= s;
        return *this;
    }
    friend Coeff operator*(Coeff a, const Rat& s) { return a *= s; }
    friend Coeff operator*(const Rat& s, Coeff a) { return a *= s; }

    // Derivative with respect to zero jet p (comp==0) or q (comp==1) of the
    // unknown-function part only; c-monomials are constants. The Laurent
    // part of a term lives in the monomial and is handled by the caller.
    Coeff d_zero_jet(int comp) const {
        Coeff r;
        for (auto& [m, c] : terms) {
            if (!m.has_unknown()) continue;
            CMono n = m;
            if (comp == 0)
                ++n.dp;
            else
                ++n.dq;
            r.add_term(n, c);
        }
        return r;
    }

    bool operator==(const Coeff& o) const { return terms == o.terms; }
};

} // namespace pvalab
