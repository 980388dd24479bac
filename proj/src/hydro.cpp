#include "pvalab/hydro.hpp"

#include "pvalab/exprio.hpp"

namespace pvalab {

namespace {
const DiffPoly kOne = DiffPoly(Rat(1));
DiffPoly pvar() { return DiffPoly::jet(0, 0, 0); }
DiffPoly qvar() { return DiffPoly::jet(1, 0, 0); }
} // namespace

HydroStructure hydro_p1() {
    HydroStructure h;
    h.g[0][0][0] = kOne; // g^x = diag(1, 0)
    h.g[1][1][1] = kOne; // g^y = diag(0, 1)
    return h;
}

HydroStructure hydro_p2() {
    HydroStructure h;
    h.g[0][0][1] = kOne;
    h.g[0][1][0] = kOne;
    h.g[1][1][1] = kOne;
    return h;
}

HydroStructure hydro_plp() {
    HydroStructure h;
    h.g[0][0][0] = pvar() * Rat(2);
    h.g[0][0][1] = qvar();
    h.g[0][1][0] = qvar();
    h.g[1][0][1] = pvar();
    h.g[1][1][0] = pvar();
    h.g[1][1][1] = qvar() * Rat(2);
    h.b[0][0][0][0] = kOne; // b^{x 11}_1
    h.b[0][1][0][1] = kOne; // b^{x 21}_2
    h.b[1][0][1][0] = kOne; // b^{y 12}_1
    h.b[1][1][1][1] = kOne; // b^{y 22}_2
    return h;
}

BracketStructure to_lambda(const HydroStructure& h) {
    BracketStructure out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            BiValue v;
            for (int a = 0; a < 2; ++a) {
                v += BiValue{h.g[a][j][i]}.mul_var(a);
                for (int k = 0; k < 2; ++k) {
                    const DiffPoly uk = DiffPoly::jet(k, a == 0 ? 1 : 0, a == 0 ? 0 : 1);
                    v += BiValue{h.b[a][j][i][k] * uk};
                }
            }
            out(i, j) = v;
        }
    return out;
}

namespace {

void note(MokhovReport& rep, int fam, const std::string& label, const DiffPoly& r) {
    if (r.is_zero()) return;
    rep.ok[static_cast<std::size_t>(fam - 1)] = false;
    rep.residuals.push_back("M" + std::to_string(fam) + "[" + label + "] = " +
                            print_diffpoly(r));
}

std::string idx(std::initializer_list<int> v) {
    std::string s;
    for (int x : v) {
        if (!s.empty()) s += ",";
        s += std::to_string(x + 1);
    }
    return s;
}

} // namespace

MokhovReport mokhov_check(const HydroStructure& h) {
    MokhovReport rep;
    rep.ok.fill(true);
    const auto& g = h.g;
    const auto& b = h.b;
    auto dgi = [&](int a, int i, int j, int k) { return g[a][i][j].partial(k, 0, 0); };
    auto dbi = [&](int a, int i, int j, int k, int r) {
        return b[a][i][j][k].partial(r, 0, 0);
    };

    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                // M1: symmetry of the metric
                note(rep, 1, idx({a, i, j}), g[a][i][j] - g[a][j][i]);
                // M2: dg/dp^k = b^{ij}_k + b^{ji}_k
                for (int k = 0; k < 2; ++k)
                    note(rep, 2, idx({a, i, j, k}),
                         dgi(a, i, j, k) - b[a][i][j][k] - b[a][j][i][k]);
            }

    // the bracketed expression shared by M3/M4 (and, differentiated, M5/M7)
    auto mix = [&](int a, int bb, int i, int j, int k) {
        DiffPoly r;
        for (int s = 0; s < 2; ++s)
            r += g[a][s][i] * b[bb][j][k][s] - g[bb][s][j] * b[a][i][k][s];
        return r;
    };

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                // M3: sum over the swap of (alpha, beta)
                for (int a = 0; a < 2; ++a)
                    for (int bb = 0; bb < 2; ++bb)
                        note(rep, 3, idx({a, bb, i, j, k}),
                             mix(a, bb, i, j, k) + mix(bb, a, j, i, k));
                // M4: sum over cyclic permutations of (i, j, k)
                for (int a = 0; a < 2; ++a)
                    for (int bb = 0; bb < 2; ++bb)
                        note(rep, 4, idx({a, bb, i, j, k}),
                             mix(a, bb, i, j, k) + mix(a, bb, j, k, i) +
                                 mix(a, bb, k, i, j));
            }

    // the bracketed expression of M5 (also reused in M7)
    auto m5core = [&](int a, int bb, int i, int j, int k, int r) {
        DiffPoly out;
        for (int s = 0; s < 2; ++s) {
            out += g[a][s][i] * (dbi(bb, j, k, s, r) - dbi(bb, j, k, r, s));
            out += b[a][i][j][s] * b[bb][s][k][r] - b[a][i][k][s] * b[bb][s][j][r];
        }
        return out;
    };

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int r = 0; r < 2; ++r) {
                    for (int a = 0; a < 2; ++a)
                        for (int bb = 0; bb < 2; ++bb) {
                            // M5: swap-sum of m5core
                            note(rep, 5, idx({a, bb, i, j, k, r}),
                                 m5core(a, bb, i, j, k, r) + m5core(bb, a, i, j, k, r));
                            // M6 (mirror-symmetric form)
                            DiffPoly lhs, rhs;
                            for (int s = 0; s < 2; ++s) {
                                lhs += g[bb][s][i] * dbi(a, j, k, r, s);
                                lhs -= b[bb][i][j][s] * b[a][s][k][r];
                                lhs -= b[bb][i][k][s] * b[a][j][s][r];
                                rhs += g[a][s][j] * dbi(bb, i, k, r, s);
                                rhs -= b[a][j][i][s] * b[bb][s][k][r];
                                rhs -= b[a][j][k][s] * b[bb][i][s][r];
                            }
                            note(rep, 6, idx({a, bb, i, j, k, r}), lhs - rhs);
                            // M7
                            for (int s = 0; s < 2; ++s) {
                                DiffPoly t = m5core(a, bb, i, j, k, r).partial(s, 0, 0);
                                t += m5core(bb, a, i, j, k, s).partial(r, 0, 0);
                                for (auto [ci, cj, ck] :
                                     {std::array{i, j, k}, std::array{j, k, i},
                                      std::array{k, i, j}}) {
                                    for (int aa = 0; aa < 2; ++aa) {
                                        t += b[bb][aa][ci][r] *
                                             (dbi(a, cj, ck, s, aa) - dbi(a, cj, ck, aa, s));
                                        t += b[a][aa][ci][s] *
                                             (dbi(bb, cj, ck, r, aa) - dbi(bb, cj, ck, aa, r));
                                    }
                                }
                                note(rep, 7, idx({a, bb, i, j, k, r, s}), t);
                            }
                        }
                }
    return rep;
}

namespace {

// Invert a DiffPoly that must be a single rational monomial in (p, q).
DiffPoly invert_mono(const DiffPoly& d, const std::string& what) {
    if (d.terms.size() != 1) throw DegeneracyError("non-monomial determinant of " + what);
    auto& [mo, c] = *d.terms.begin();
    if (!mo.jets.empty() || !c.is_rational())
        throw DegeneracyError("degenerate metric " + what);
    Rat v = c.rational_value();
    if (v == 0) throw DegeneracyError("singular metric " + what);
    Mono inv;
    inv.ep = -mo.ep;
    inv.eq = -mo.eq;
    DiffPoly r;
    r.terms.emplace(inv, Coeff(Rat(1) / v));
    return r;
}

} // namespace

ObstructionReport obstruction_tensors(const HydroStructure& h) {
    ObstructionReport rep;
    rep.ok.fill(true);
    const auto& g = h.g;
    // lowered metrics g^alpha_{ij} via the 2x2 adjugate
    std::array<std::array<std::array<DiffPoly, 2>, 2>, 2> glow;
    for (int a = 0; a < 2; ++a) {
        // Gamma contracts glow with b; if b^alpha vanishes identically the
        // inverse metric is never used, so don't demand invertibility then.
        bool need = false;
        for (auto& bi : h.b[static_cast<std::size_t>(a)])
            for (auto& bj : bi)
                for (auto& bk : bj)
                    if (!bk.is_zero()) need = true;
        if (!need) continue;
        DiffPoly det = g[a][0][0] * g[a][1][1] - g[a][0][1] * g[a][1][0];
        DiffPoly inv = invert_mono(det, a == 0 ? "g^x" : "g^y");
        glow[a][0][0] = g[a][1][1] * inv;
        glow[a][1][1] = g[a][0][0] * inv;
        glow[a][0][1] = -g[a][0][1] * inv;
        glow[a][1][0] = -g[a][1][0] * inv;
    }
    // Gamma^{alpha k}_{ij} = -g^alpha_{is} b^{alpha sk}_j
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    DiffPoly v;
                    for (int s = 0; s < 2; ++s) v -= glow[a][i][s] * h.b[a][s][k][j];
                    rep.gamma[a][i][j][k] = v;
                }
    // T^{ab i}_{jk} = Gamma^{b i}_{jk} - Gamma^{a i}_{jk}
    for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        rep.t_low[a][bb][i][j][k] =
                            rep.gamma[bb][j][k][i] - rep.gamma[a][j][k][i];
    // T^{ab ijk} = g^{a ia} g^{b kb} T^{ab j}_{ab}
    for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        DiffPoly v;
                        for (int s = 0; s < 2; ++s)
                            for (int t = 0; t < 2; ++t)
                                v += g[a][i][s] * g[bb][k][t] * rep.t_low[a][bb][j][s][t];
                        rep.t_up[a][bb][i][j][k] = v;
                    }

    auto note4 = [&](int cond, const std::string& label, const DiffPoly& r) {
        if (r.is_zero()) return;
        rep.ok[static_cast<std::size_t>(cond)] = false;
        rep.residuals.push_back(std::string(1, char('a' + cond)) + "[" + label + "] = " +
                                print_diffpoly(r));
    };

    for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        // (a) T^{ijk} = T^{kji}
                        note4(0, idx({a, bb, i, j, k}),
                              rep.t_up[a][bb][i][j][k] - rep.t_up[a][bb][k][j][i]);
                        // (b) cyclic sum T^{ijk} + T^{jki} + T^{kij} = 0
                        note4(1, idx({a, bb, i, j, k}),
                              rep.t_up[a][bb][i][j][k] + rep.t_up[a][bb][j][k][i] +
                                  rep.t_up[a][bb][k][i][j]);
                        // (c) T^{ijl} T^{k}_{lr} = T^{ikl} T^{j}_{lr}
                        for (int r = 0; r < 2; ++r) {
                            DiffPoly res;
                            for (int l = 0; l < 2; ++l)
                                res += rep.t_up[a][bb][i][j][l] * rep.t_low[a][bb][k][l][r] -
                                       rep.t_up[a][bb][i][k][l] * rep.t_low[a][bb][j][l][r];
                            note4(2, idx({a, bb, i, j, k, r}), res);
                        }
                        // (d) nabla^a_r T^{ab ijk} = 0, connection Gamma^a on
                        // each raised index
                        for (int r = 0; r < 2; ++r) {
                            DiffPoly res = rep.t_up[a][bb][i][j][k].partial(r, 0, 0);
                            for (int s = 0; s < 2; ++s) {
                                res += rep.gamma[a][r][s][i] * rep.t_up[a][bb][s][j][k];
                                res += rep.gamma[a][r][s][j] * rep.t_up[a][bb][i][s][k];
                                res += rep.gamma[a][r][s][k] * rep.t_up[a][bb][i][j][s];
                            }
                            note4(3, idx({a, bb, i, j, k, r}), res);
                        }
                    }
    return rep;
}

} // namespace pvalab
