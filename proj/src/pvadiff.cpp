#include "pvalab/pvadiff.hpp"

namespace pvalab {

DiffPoly apply_field(const EvoField& x, const DiffPoly& f) {
    auto deps = f.dependencies();
    deps.insert(JetVar{0, 0, 0});
    deps.insert(JetVar{1, 0, 0});
    DiffPoly out;
    for (auto& v : deps) {
        DiffPoly fL = f.partial(v.comp, v.m, v.n);
        if (fL.is_zero()) continue;
        DiffPoly xi = x.X[static_cast<std::size_t>(v.comp)];
        for (int s = 0; s < v.m; ++s) xi = xi.total_derivative(0);
        for (int s = 0; s < v.n; ++s) xi = xi.total_derivative(1);
        out += xi * fL;
    }
    return out;
}

BiValue relabel_to_mu(const BiValue& v) {
    BiValue out;
    for (auto& [k, p] : v.terms) {
        LKey nk{0, 0, static_cast<std::int16_t>(k.l1 + k.m1),
                static_cast<std::int16_t>(k.l2 + k.m2)};
        out.add_term(nk, p);
    }
    return out;
}

BiValue gen_bracket(const BracketStructure& b, int i, const BiValue& g, const Rat& cl,
                    const Rat& cm) {
    const DiffPoly ui = DiffPoly::jet(i, 0, 0);
    BiValue out;
    for (auto& [k, gp] : g.terms) {
        BiValue piece = master_bracket_gen(b, ui, gp, cl, cm);
        for (auto& [k2, p] : piece.terms) {
            LKey nk{static_cast<std::int16_t>(k.l1 + k2.l1),
                    static_cast<std::int16_t>(k.l2 + k2.l2),
                    static_cast<std::int16_t>(k.m1 + k2.m1),
                    static_cast<std::int16_t>(k.m2 + k2.m2)};
            out.add_term(nk, p);
        }
    }
    return out;
}

BiValue middle_bracket(const BracketStructure& b, const BiValue& g, int k) {
    const DiffPoly uk = DiffPoly::jet(k, 0, 0);
    BiValue out;
    for (auto& [key, gp] : g.terms) {
        BiValue piece = master_bracket_gen(b, gp, uk, Rat(1), Rat(1));
        for (auto& [k2, p] : piece.terms) {
            LKey nk{static_cast<std::int16_t>(key.l1 + k2.l1),
                    static_cast<std::int16_t>(key.l2 + k2.l2),
                    static_cast<std::int16_t>(key.m1 + k2.m1),
                    static_cast<std::int16_t>(key.m2 + k2.m2)};
            out.add_term(nk, p);
        }
    }
    return out;
}

TriValue jacobiator(const BracketStructure& p) {
    TriValue out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int k = 0; k < kNumComponents; ++k) {
                BiValue inner_jk = relabel_to_mu(p(j, k));
                BiValue t1 = gen_bracket(p, i, inner_jk, Rat(1), Rat(0));
                BiValue t2 = gen_bracket(p, j, p(i, k), Rat(0), Rat(1));
                BiValue t3 = middle_bracket(p, p(i, j), k);
                out(i, j, k) = t1 - t2 - t3;
            }
    return out;
}

TriValue schouten(const BracketStructure& a, const BracketStructure& b) {
    TriValue out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int k = 0; k < kNumComponents; ++k) {
                BiValue inner_b = relabel_to_mu(b(j, k));
                BiValue inner_a = relabel_to_mu(a(j, k));
                BiValue v = gen_bracket(a, i, inner_b, Rat(1), Rat(0));
                v += gen_bracket(b, i, inner_a, Rat(1), Rat(0));
                v -= gen_bracket(a, j, b(i, k), Rat(0), Rat(1));
                v -= gen_bracket(b, j, a(i, k), Rat(0), Rat(1));
                v -= middle_bracket(b, a(i, j), k);
                v -= middle_bracket(a, b(i, j), k);
                out(i, j, k) = v;
            }
    return out;
}

BracketStructure d_on_field(const BracketStructure& p, const EvoField& x) {
    BracketStructure out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j) {
            const DiffPoly ui = DiffPoly::jet(i, 0, 0);
            const DiffPoly uj = DiffPoly::jet(j, 0, 0);
            BiValue v = master_bracket(p, x.X[static_cast<std::size_t>(i)], uj);
            v += master_bracket(p, ui, x.X[static_cast<std::size_t>(j)]);
            for (auto& [k, poly] : p(i, j).terms) v.add_term(k, -apply_field(x, poly));
            out(i, j) = v;
        }
    return out;
}

TriValue d_on_2cochain(const BracketStructure& p, const BracketStructure& k) {
    TriValue out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int kk = 0; kk < kNumComponents; ++kk) {
                BiValue v = gen_bracket(p, i, relabel_to_mu(k(j, kk)), Rat(1), Rat(0));
                v -= gen_bracket(p, j, k(i, kk), Rat(0), Rat(1));
                v -= middle_bracket(p, k(i, j), kk);
                v += gen_bracket(k, i, relabel_to_mu(p(j, kk)), Rat(1), Rat(0));
                v -= gen_bracket(k, j, p(i, kk), Rat(0), Rat(1));
                v -= middle_bracket(k, p(i, j), kk);
                out(i, j, kk) = v;
            }
    return out;
}

} // namespace pvalab
