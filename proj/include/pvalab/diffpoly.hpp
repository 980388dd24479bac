#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pvalab/coeff.hpp"

namespace pvalab {

inline constexpr int kNumComponents = 2; // u^1 = p, u^2 = q
inline constexpr int kNumAxes = 2;       // x, y

// A jet variable u^comp_{(m,n)} with (m,n) != (0,0). The zero jets p, q are
// kept out of the factor list: they live in the Laurent exponents of Mono.
struct JetVar {
    std::int16_t comp = 0; // 0 = p, 1 = q
    std::int16_t m = 0, n = 0;
    auto operator<=>(const JetVar&) const = default;
};

struct JetFactor {
    JetVar v;
    std::int16_t pow = 1;
    auto operator<=>(const JetFactor&) const = default;
};

// Monomial: p^ep q^eq * product of positive-order jet factors (sorted).
// ep, eq may be negative (Laurent).
struct Mono {
    std::int32_t ep = 0, eq = 0;
    std::vector<JetFactor> jets; // sorted by JetVar, no zero powers

    auto operator<=>(const Mono&) const = default;

    Mono times(const Mono& o) const {
        Mono r;
        r.ep = ep + o.ep;
        r.eq = eq + o.eq;
        r.jets.reserve(jets.size() + o.jets.size());
        std::size_t i = 0, j = 0;
        while (i < jets.size() && j < o.jets.size()) {
            if (jets[i].v < o.jets[j].v)
                r.jets.push_back(jets[i++]);
            else if (o.jets[j].v < jets[i].v)
                r.jets.push_back(o.jets[j++]);
            else {
                JetFactor f = jets[i++];
                f.pow = static_cast<std::int16_t>(f.pow + o.jets[j++].pow);
                if (f.pow) r.jets.push_back(f);
            }
        }
        while (i < jets.size()) r.jets.push_back(jets[i++]);
        while (j < o.jets.size()) r.jets.push_back(o.jets[j++]);
        return r;
    }

    // Sum of (m+n)*pow over the positive-order jet factors.
    int diff_order() const {
        int d = 0;
        for (auto& f : jets) d += (f.v.m + f.v.n) * f.pow;
        return d;
    }
};

// Differential polynomial: finite Coeff-linear combination of Monos.
class DiffPoly {
public:
    std::map<Mono, Coeff> terms;

    DiffPoly() = default;
    explicit DiffPoly(const Rat& r) {
        Coeff c(r);
        if (!c.is_zero()) terms.emplace(Mono{}, std::move(c));
    }
    explicit DiffPoly(const Coeff& c) {
        if (!c.is_zero()) terms.emplace(Mono{}, c);
    }

    // u^comp_{(m,n)}; zero jets become Laurent exponents.
    static DiffPoly jet(int comp, int m, int n, int pow = 1) {
        DiffPoly r;
        Mono mo;
        if (m == 0 && n == 0) {
            (comp == 0 ? mo.ep : mo.eq) = pow;
        } else {
            mo.jets.push_back(JetFactor{
                JetVar{static_cast<std::int16_t>(comp), static_cast<std::int16_t>(m),
                       static_cast<std::int16_t>(n)},
                static_cast<std::int16_t>(pow)});
        }
        r.terms.emplace(mo, Coeff(Rat(1)));
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const DiffPoly& o) const { return terms == o.terms; }

    void add_term(const Mono& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    DiffPoly& operator+=(const DiffPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    DiffPoly& operator-=(const DiffPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    DiffPoly operator-() const {
        DiffPoly r;
        for (auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }

    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r;
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
    DiffPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [m, c] : terms) c *= s;
        return *this;
    }
    friend DiffPoly operator*(DiffPoly a, const Rat& s) { return a *= s; }
    friend DiffPoly operator*(const Rat& s, DiffPoly a) { return a *= s; }
    DiffPoly& operator*=(const Coeff& s) {
        DiffPoly r;
        for (auto& [m, c] : terms) r.add_term(m, c * s);
        return *this = std::move(r);
    }
    friend DiffPoly operator*(DiffPoly a, const Coeff& s) { return a *= s; }

    bool has_unknown() const {
        for (auto& [m, c] : terms)
            if (c.has_unknown()) return true;
        return false;
    }

    // Partial derivative with respect to the jet variable u^comp_{(m,n)}.
    // For the zero jets this also differentiates the unknown functions,
    // which depend on p and q.
    DiffPoly partial(int comp, int m, int n) const;

    // Total derivative along axis 0 (x) or 1 (y).
    DiffPoly total_derivative(int axis) const;

    // Variational derivative delta/delta u^comp.
    DiffPoly variational(int comp) const;

    // Max over monomials of the total positive-jet order.
    int diff_order() const {
        int d = 0;
        for (auto& [m, c] : terms) d = std::max(d, m.diff_order());
        return d;
    }

    // All jet variables appearing (zero jets reported with m=n=0 when their
    // Laurent exponent is nonzero or an unknown function is present).
    std::set<JetVar> dependencies() const;
};

inline DiffPoly DiffPoly::partial(int comp, int m, int n) const {
    DiffPoly r;
    if (m == 0 && n == 0) {
        for (auto& [mo, c] : terms) {
            const std::int32_t e = (comp == 0) ? mo.ep : mo.eq;
            if (e != 0) {
                Mono nm = mo;
                (comp == 0 ? nm.ep : nm.eq) = e - 1;
                r.add_term(nm, c * Rat(e));
            }
            Coeff dc = c.d_zero_jet(comp);
            if (!dc.is_zero()) r.add_term(mo, dc);
        }
        return r;
    }
    const JetVar target{static_cast<std::int16_t>(comp), static_cast<std::int16_t>(m),
                        static_cast<std::int16_t>(n)};
    for (auto& [mo, c] : terms) {
        for (std::size_t i = 0; i < mo.jets.size(); ++i) {
            if (mo.jets[i].v != target) continue;
            Mono nm = mo;
            if (nm.jets[i].pow == 1)
                nm.jets.erase(nm.jets.begin() + static_cast<std::ptrdiff_t>(i));
            else
                --nm.jets[i].pow;
            r.add_term(nm, c * Rat(mo.jets[i].pow));
            break; // jets are unique per monomial
        }
    }
    return r;
}

inline DiffPoly DiffPoly::total_derivative(int axis) const {
    const int dm = (axis == 0) ? 1 : 0;
    const int dn = (axis == 0) ? 0 : 1;
    DiffPoly r;
    for (auto& [mo, c] : terms) {
        DiffPoly base;
        base.terms.emplace(mo, c);
        // Laurent factors p^ep, q^eq
        for (int comp = 0; comp < kNumComponents; ++comp) {
            const std::int32_t e = (comp == 0) ? mo.ep : mo.eq;
            if (e == 0) continue;
            Mono nm = mo;
            (comp == 0 ? nm.ep : nm.eq) = e - 1;
            DiffPoly piece;
            piece.terms.emplace(nm, c * Rat(e));
            r += piece * DiffPoly::jet(comp, dm, dn);
        }
        // positive-order jet factors
        for (std::size_t i = 0; i < mo.jets.size(); ++i) {
            const JetFactor& f = mo.jets[i];
            Mono nm = mo;
            if (nm.jets[i].pow == 1)
                nm.jets.erase(nm.jets.begin() + static_cast<std::ptrdiff_t>(i));
            else
                --nm.jets[i].pow;
            DiffPoly piece;
            piece.terms.emplace(nm, c * Rat(f.pow));
            r += piece * DiffPoly::jet(f.v.comp, f.v.m + dm, f.v.n + dn);
        }
        // chain rule through the unknown functions of (p, q)
        for (int comp = 0; comp < kNumComponents; ++comp) {
            Coeff dc = c.d_zero_jet(comp);
            if (dc.is_zero()) continue;
            DiffPoly piece;
            piece.terms.emplace(mo, std::move(dc));
            r += piece * DiffPoly::jet(comp, dm, dn);
        }
    }
    return r;
}

inline std::set<JetVar> DiffPoly::dependencies() const {
    std::set<JetVar> out;
    for (auto& [mo, c] : terms) {
        if (mo.ep != 0) out.insert(JetVar{0, 0, 0});
        if (mo.eq != 0) out.insert(JetVar{1, 0, 0});
        for (auto& f : mo.jets) out.insert(f.v);
        for (auto& [cm, cr] : c.terms)
            if (cm.has_unknown()) {
                out.insert(JetVar{0, 0, 0});
                out.insert(JetVar{1, 0, 0});
            }
    }
    return out;
}

inline DiffPoly DiffPoly::variational(int comp) const {
    // delta/delta u = sum_{m,n} (-d/dx)^m (-d/dy)^n applied to the partial.
    std::set<std::pair<int, int>> orders;
    orders.insert({0, 0});
    for (auto& v : dependencies())
        if (v.comp == comp) orders.insert({v.m, v.n});
    DiffPoly r;
    for (auto [m, n] : orders) {
        DiffPoly term = partial(comp, m, n);
        for (int i = 0; i < m; ++i) term = term.total_derivative(0);
        for (int i = 0; i < n; ++i) term = term.total_derivative(1);
        if ((m + n) % 2)
            r -= term;
        else
            r += term;
    }
    return r;
}

} // namespace pvalab
