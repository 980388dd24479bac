#include "pvalab/deform.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "pvalab/exprio.hpp"
#include "pvalab/symtab.hpp"

namespace pvalab {

namespace {

char dg(int v) { return static_cast<char>('1' + v); }

LKey lkey_axes(const std::vector<int>& axes) {
    LKey k{0, 0, 0, 0};
    for (int a : axes) {
        if (a == 0)
            ++k.l1;
        else
            ++k.l2;
    }
    return k;
}

Mono jet_mono(std::initializer_list<JetVar> vars) {
    DiffPoly d(Rat(1));
    for (auto& v : vars) d *= DiffPoly::jet(v.comp, v.m, v.n);
    return d.terms.begin()->first;
}

// number of distinct orderings of a sorted tuple
Rat perm_count(std::vector<int> v) {
    std::int64_t f = 1;
    for (std::size_t i = 2; i <= v.size(); ++i) f *= static_cast<std::int64_t>(i);
    std::int64_t rep = 1;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        std::int64_t run = 1;
        while (j + 1 < v.size() && v[j + 1] == v[i]) {
            ++j;
            ++run;
        }
        for (std::int64_t t = 2; t <= run; ++t) rep *= t;
        i = j + 1;
    }
    return Rat(f / rep);
}

struct Builder {
    Ansatz a;
    void slot_terms(const std::string& name, const LKey& lam, const Mono& jets,
                    const Rat& factor, bool sym, int i, int j) {
        std::int32_t s = intern_symbol(name);
        if (a.terms.empty() || a.slots.empty() || a.slots.back() != name)
            if (std::find(a.slots.begin(), a.slots.end(), name) == a.slots.end())
                a.slots.push_back(name);
        a.terms.push_back({name, s, i, j, lam, jets, factor});
        if (sym) {
            if (i != j) a.terms.push_back({name, s, j, i, lam, jets, factor});
        } else {
            a.terms.push_back({name, s, j, i, lam, jets, -factor});
        }
    }
};

JetVar jv(int comp, int m, int n) {
    return JetVar{static_cast<std::int16_t>(comp), static_cast<std::int16_t>(m),
                  static_cast<std::int16_t>(n)};
}

// first-order jet along axis c of component l
JetVar j1(int l, int c) { return jv(l, c == 0 ? 1 : 0, c == 0 ? 0 : 1); }
// second-order jet d_a d_b p^l
JetVar j2(int l, int a, int b) {
    int m = (a == 0) + (b == 0);
    return jv(l, m, 2 - m);
}
JetVar j3(int l, int a, int b, int c) {
    int m = (a == 0) + (b == 0) + (c == 0);
    return jv(l, m, 3 - m);
}

} // namespace

BracketStructure Ansatz::matrix() const {
    BracketStructure r;
    for (auto& t : terms) {
        DiffPoly d;
        d.add_term(t.jets, Coeff::unknown(t.sym) * t.factor);
        r(t.i, t.j).add_term(t.lam, d);
    }
    return r;
}

BracketStructure Ansatz::bracket() const { return skew_build(matrix()); }

BracketStructure Ansatz::matrix_from(const std::map<std::string, DiffPoly>& values) const {
    BracketStructure r;
    for (auto& t : terms) {
        auto it = values.find(t.slot);
        if (it == values.end() || it->second.is_zero()) continue;
        DiffPoly jets;
        jets.add_term(t.jets, Coeff(Rat(1)));
        r(t.i, t.j).add_term(t.lam, it->second * jets * t.factor);
    }
    return r;
}

BracketStructure Ansatz::bracket_from(const std::map<std::string, DiffPoly>& values) const {
    return skew_build(matrix_from(values));
}

Ansatz build_ansatz3() {
    Builder b;
    b.a.degree = 3;
    // A^{abc}_{ij} lambda_a lambda_b lambda_c, symmetric slots
    for (int x = 0; x < 2; ++x)
        for (int y = x; y < 2; ++y)
            for (int z = y; z < 2; ++z) {
                Rat mult = perm_count({x, y, z});
                LKey lam = lkey_axes({x, y, z});
                for (int i = 0; i < 2; ++i)
                    for (int j = i; j < 2; ++j) {
                        std::string name = std::string("A^{") + dg(x) + dg(y) + dg(z) +
                                           "}_{" + dg(i) + dg(j) + "}";
                        b.slot_terms(name, lam, Mono{}, mult, true, i, j);
                    }
            }
    // B^{ab,cl}_{12} d_c p^l lambda_a lambda_b, skew slot
    for (int x = 0; x < 2; ++x)
        for (int y = x; y < 2; ++y)
            for (int c = 0; c < 2; ++c)
                for (int l = 0; l < 2; ++l) {
                    std::string name = std::string("B^{") + dg(x) + dg(y) + "," + dg(c) +
                                       dg(l) + "}_{12}";
                    b.slot_terms(name, lkey_axes({x, y}), jet_mono({j1(l, c)}),
                                 perm_count({x, y}), false, 0, 1);
                }
    // C^{a,bl,cm}_{ij} d_b p^l d_c p^m lambda_a, symmetric slots
    for (int x = 0; x < 2; ++x) {
        std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (std::size_t u = 0; u < pairs.size(); ++u)
            for (std::size_t v = u; v < pairs.size(); ++v) {
                auto [bax, l] = pairs[u];
                auto [cax, m] = pairs[v];
                Rat mult(u == v ? 1 : 2);
                Mono jets = jet_mono({j1(l, bax), j1(m, cax)});
                for (int i = 0; i < 2; ++i)
                    for (int j = i; j < 2; ++j) {
                        std::string name = std::string("C^{") + dg(x) + "," + dg(bax) +
                                           dg(l) + "," + dg(cax) + dg(m) + "}_{" + dg(i) +
                                           dg(j) + "}";
                        b.slot_terms(name, lkey_axes({x}), jets, mult, true, i, j);
                    }
            }
    }
    // D^{a,bcl}_{ij} d_b d_c p^l lambda_a, symmetric slots
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = y; z < 2; ++z)
                for (int l = 0; l < 2; ++l) {
                    Rat mult(y == z ? 1 : 2);
                    Mono jets = jet_mono({j2(l, y, z)});
                    for (int i = 0; i < 2; ++i)
                        for (int j = i; j < 2; ++j) {
                            std::string name = std::string("D^{") + dg(x) + "," + dg(y) +
                                               dg(z) + dg(l) + "}_{" + dg(i) + dg(j) + "}";
                            b.slot_terms(name, lkey_axes({x}), jets, mult, true, i, j);
                        }
                }
    // E^{abc,l}_{12} (1/2) d_a d_b d_c p^l, skew slot
    for (int x = 0; x < 2; ++x)
        for (int y = x; y < 2; ++y)
            for (int z = y; z < 2; ++z)
                for (int l = 0; l < 2; ++l) {
                    std::string name = std::string("E^{") + dg(x) + dg(y) + dg(z) + "," +
                                       dg(l) + "}_{12}";
                    b.slot_terms(name, LKey{}, jet_mono({j3(l, x, y, z)}),
                                 perm_count({x, y, z}) / 2, false, 0, 1);
                }
    // F^{abl,cm}_{12} (1/2) d_a d_b p^l d_c p^m, skew slot
    for (int x = 0; x < 2; ++x)
        for (int y = x; y < 2; ++y)
            for (int l = 0; l < 2; ++l)
                for (int c = 0; c < 2; ++c)
                    for (int m = 0; m < 2; ++m) {
                        std::string name = std::string("F^{") + dg(x) + dg(y) + dg(l) +
                                           "," + dg(c) + dg(m) + "}_{12}";
                        b.slot_terms(name, LKey{}, jet_mono({j2(l, x, y), j1(m, c)}),
                                     perm_count({x, y}) / 2, false, 0, 1);
                    }
    // G^{al,bm,cn}_{12} (1/2) d_a p^l d_b p^m d_c p^n, skew slot
    {
        std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (std::size_t u = 0; u < pairs.size(); ++u)
            for (std::size_t v = u; v < pairs.size(); ++v)
                for (std::size_t w = v; w < pairs.size(); ++w) {
                    Rat mult = perm_count({static_cast<int>(u), static_cast<int>(v),
                                           static_cast<int>(w)});
                    auto [a1, l1] = pairs[u];
                    auto [a2, l2] = pairs[v];
                    auto [a3, l3] = pairs[w];
                    std::string name = std::string("G^{") + dg(a1) + dg(l1) + "," +
                                       dg(a2) + dg(l2) + "," + dg(a3) + dg(l3) + "}_{12}";
                    b.slot_terms(name, LKey{},
                                 jet_mono({j1(l1, a1), j1(l2, a2), j1(l3, a3)}), mult / 2,
                                 false, 0, 1);
                }
    }
    std::sort(b.a.slots.begin(), b.a.slots.end());
    return b.a;
}

namespace {

void enum_jet_monos(const std::vector<JetVar>& vars, std::size_t idx, int weight,
                    int maxfac, Mono cur, std::vector<Mono>& out) {
    if (weight == 0) {
        out.push_back(cur);
        return;
    }
    if (idx == vars.size()) return;
    const JetVar& v = vars[idx];
    int w = v.m + v.n;
    for (int k = 0; k * w <= weight && (maxfac < 0 || k <= maxfac); ++k) {
        Mono next = cur;
        if (k > 0) next.jets.push_back(JetFactor{v, static_cast<std::int16_t>(k)});
        enum_jet_monos(vars, idx + 1, weight - k * w, maxfac < 0 ? -1 : maxfac - k, next,
                       out);
    }
}

std::string lkey_string(const LKey& k) {
    std::string s;
    auto app = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app("l1", k.l1);
    app("l2", k.l2);
    return s.empty() ? "1" : s;
}

std::string jets_string(const Mono& m) {
    std::string s;
    for (auto& f : m.jets) {
        if (!s.empty()) s += "*";
        s += (f.v.comp == 0 ? "p[" : "q[") + std::to_string(f.v.m) + "," +
             std::to_string(f.v.n) + "]";
        if (f.pow > 1) s += "^" + std::to_string(f.pow);
    }
    return s.empty() ? "1" : s;
}

} // namespace

Ansatz build_ansatz5(int max_jet_factors) {
    Ansatz a;
    a.degree = 5;
    std::vector<JetVar> vars;
    for (int w = 1; w <= 5; ++w)
        for (int comp = 0; comp < 2; ++comp)
            for (int m = 0; m <= w; ++m) vars.push_back(jv(comp, m, w - m));
    for (int s = 5; s >= 0; --s) {
        std::vector<Mono> monos;
        enum_jet_monos(vars, 0, 5 - s, max_jet_factors, Mono{}, monos);
        for (int k = 0; k <= s; ++k) {
            LKey lam{static_cast<std::int16_t>(k), static_cast<std::int16_t>(s - k), 0, 0};
            for (auto& mo : monos) {
                if (s % 2 == 1) {
                    for (int i = 0; i < 2; ++i)
                        for (int j = i; j < 2; ++j) {
                            std::string name = "N[" + lkey_string(lam) + ";" +
                                               jets_string(mo) + ";" + dg(i) + dg(j) + "]";
                            std::int32_t sym = intern_symbol(name);
                            a.slots.push_back(name);
                            a.terms.push_back({name, sym, i, j, lam, mo, Rat(1)});
                            if (i != j)
                                a.terms.push_back({name, sym, j, i, lam, mo, Rat(1)});
                        }
                } else {
                    std::string name =
                        "N[" + lkey_string(lam) + ";" + jets_string(mo) + ";12]";
                    std::int32_t sym = intern_symbol(name);
                    a.slots.push_back(name);
                    a.terms.push_back({name, sym, 0, 1, lam, mo, Rat(1)});
                    a.terms.push_back({name, sym, 1, 0, lam, mo, Rat(-1)});
                }
            }
        }
    }
    std::sort(a.slots.begin(), a.slots.end());
    return a;
}

Ansatz build_ansatz(int degree) {
    if (degree == 3) return build_ansatz3();
    if (degree == 5) return build_ansatz5();
    throw GaugeError("no ansatz of degree " + std::to_string(degree));
}

std::map<std::string, DiffPoly> extract_coefficients(const BracketStructure& k) {
    static const Ansatz ansatz = build_ansatz3();
    // lookup (i, j, lambda key, jet monomial shape) -> (slot, factor)
    using Key = std::tuple<int, int, LKey, Mono>;
    static const std::map<Key, std::pair<std::string, Rat>> lookup = [] {
        std::map<Key, std::pair<std::string, Rat>> m;
        for (auto& t : ansatz.terms)
            m.emplace(Key{t.i, t.j, t.lam, t.jets}, std::make_pair(t.slot, t.factor));
        return m;
    }();

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (k(i, j).has_mu()) throw GaugeError("bracket entry contains mu");
            for (auto& [key, p] : k(i, j).terms)
                if (key.l1 + key.l2 > 3)
                    throw GaugeError("lambda degree exceeds 3 in bracket entry");
        }

    std::map<std::string, DiffPoly> values;
    BracketStructure mrec; // raw recovered M, levels above the current one
    for (int s = 3; s >= 0; --s) {
        // spread of already-recovered higher levels through the adjoint
        BiValue star[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) star[i][j] = adjoint_star(mrec(i, j));
        auto rprime = [&](int i, int j, const LKey& key) {
            return k(i, j).coefficient(key.l1, key.l2) +
                   star[j][i].coefficient(key.l1, key.l2);
        };
        auto record = [&](int i, int j, const LKey& key, const DiffPoly& val,
                          bool attribute) {
            if (val.is_zero()) return;
            mrec(i, j).add_term(key, val);
            if (!attribute) return;
            for (auto& [mo, c] : val.terms) {
                auto it = lookup.find(Key{i, j, key, Mono{0, 0, mo.jets}});
                if (it == lookup.end())
                    throw GaugeError("no degree-3 slot matches entry (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     ") at " + lkey_string(key) + " with jets " +
                                     jets_string(mo));
                DiffPoly piece;
                piece.add_term(Mono{mo.ep, mo.eq, {}}, c);
                auto [slot, factor] = it->second;
                auto [vit, ins] = values.emplace(slot, piece * (Rat(1) / factor));
                if (!ins) vit->second += piece * (Rat(1) / factor);
            }
        };
        for (int l1 = 0; l1 <= s; ++l1) {
            LKey key{static_cast<std::int16_t>(l1), static_cast<std::int16_t>(s - l1), 0,
                     0};
            if (s % 2 == 1) {
                for (int i = 0; i < 2; ++i)
                    for (int j = i; j < 2; ++j) {
                        DiffPoly r = rprime(i, j, key);
                        if (i != j && !(rprime(j, i, key) == r))
                            throw GaugeError("symmetric part mismatch at level " +
                                             std::to_string(s));
                        DiffPoly val = r * Rat(1, 2);
                        record(i, j, key, val, true);
                        if (i != j) record(j, i, key, val, false);
                    }
            } else {
                for (int i = 0; i < 2; ++i)
                    if (!rprime(i, i, key).is_zero())
                        throw GaugeError("diagonal obstruction at even level " +
                                         std::to_string(s));
                DiffPoly r = rprime(0, 1, key);
                if (!(rprime(1, 0, key) == -r))
                    throw GaugeError("skew part mismatch at level " + std::to_string(s));
                DiffPoly val = r * Rat(1, 2);
                record(0, 1, key, val, true);
                record(1, 0, key, -val, false);
            }
        }
    }
    for (auto it = values.begin(); it != values.end();)
        it = it->second.is_zero() ? values.erase(it) : std::next(it);

    BracketStructure rebuilt = ansatz.bracket_from(values);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            BiValue diff = k(i, j) - rebuilt(i, j);
            if (!diff.is_zero())
                throw GaugeError("rebuild residual at entry (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "): " +
                                 print_bivalue(diff));
        }
    return values;
}

namespace {

Coeff set_constants_coeff(const Coeff& c,
                          const std::array<std::optional<Rat>, 5>& vals) {
    Coeff r;
    for (auto& [cm, rat] : c.terms) {
        Rat factor = rat;
        CMono nm = cm;
        for (int k = 0; k < kNumConstants; ++k) {
            if (!vals[static_cast<std::size_t>(k)]) continue;
            for (int e = 0; e < nm.ce[static_cast<std::size_t>(k)]; ++e)
                factor *= *vals[static_cast<std::size_t>(k)];
            nm.ce[static_cast<std::size_t>(k)] = 0;
        }
        if (factor != 0) r.add_term(nm, factor);
    }
    return r;
}

} // namespace

BiValue set_constants(const BiValue& v, const std::array<std::optional<Rat>, 5>& vals) {
    BiValue r;
    for (auto& [k, p] : v.terms) {
        DiffPoly np;
        for (auto& [mo, c] : p.terms) {
            Coeff nc = set_constants_coeff(c, vals);
            if (!nc.is_zero()) np.add_term(mo, nc);
        }
        r.add_term(k, np);
    }
    return r;
}

BracketStructure set_constants(const BracketStructure& b,
                               const std::array<std::optional<Rat>, 5>& vals) {
    BracketStructure r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = set_constants(b(i, j), vals);
    return r;
}

BracketStructure base_structure(const std::string& name) {
    if (name == "p1") return structure_p1();
    if (name == "p2") return structure_p2();
    if (name == "plp") return structure_plp();
    throw std::runtime_error("unknown base structure: " + name);
}

namespace {

// degree-3 cocycle representative over the second normal form, written from
// its nonzero family coefficients
BracketStructure make_h23_p2() {
    std::map<std::string, DiffPoly> v;
    auto set = [&](const char* slot, const char* expr) {
        v[slot] = parse_diffpoly(expr);
    };
    set("A^{122}_{11}", "c1*p/3");
    set("A^{222}_{11}", "c4");
    set("A^{222}_{12}", "c2*p - 3/2*c0");
    set("A^{222}_{22}", "2/3*c3*p");
    set("B^{12,22}_{12}", "c1/2");
    set("B^{22,12}_{12}", "c1/2");
    set("B^{22,21}_{12}", "c2/2");
    set("D^{1,221}_{11}", "c1");
    set("D^{2,221}_{12}", "c1/2 - 2*c2");
    set("D^{2,221}_{22}", "-2*c3");
    set("D^{2,222}_{22}", "-c1 - 2*c2");
    set("E^{122,2}_{12}", "c1/6");
    set("E^{222,1}_{12}", "(c2 - c1)/2");
    return build_ansatz3().bracket_from(v);
}

BracketStructure scale_structure(const BracketStructure& b, const Coeff& c) {
    BracketStructure r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            for (auto& [k, p] : b(i, j).terms) r(i, j).add_term(k, p * c);
        }
    return r;
}

BracketStructure add_structures(const BracketStructure& a, const BracketStructure& b) {
    BracketStructure r = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) += b(i, j);
    return r;
}

const std::map<std::string, BracketStructure>& catalog() {
    static std::mutex mu;
    static std::map<std::string, BracketStructure> m;
    std::lock_guard<std::mutex> lock(mu);
    if (m.empty()) {
        m["p1"] = structure_p1();
        m["p2"] = structure_p2();
        m["plp"] = structure_plp();
        m["h23-p1"] = load_bracket_file(data_dir() + "/h23-p1.bracket");
        m["h23-p2"] = make_h23_p2();
        m["h23-plp-1"] = load_bracket_file(data_dir() + "/h23-plp-1.bracket");
        m["h23-plp-2"] = load_bracket_file(data_dir() + "/h23-plp-2.bracket");
        m["h23-plp"] =
            add_structures(scale_structure(m["h23-plp-1"], Coeff::constant(1)),
                           scale_structure(m["h23-plp-2"], Coeff::constant(2)));
        auto at = [&](const BracketStructure& b, std::optional<Rat> c0,
                      std::optional<Rat> c1, std::optional<Rat> c2, std::optional<Rat> c3,
                      std::optional<Rat> c4) {
            return set_constants(b, {c0, c1, c2, c3, c4});
        };
        m["p1-c3"] = at(m["h23-p1"], Rat(0), Rat(0), Rat(0), Rat(1), Rat(0));
        m["p1-c4"] = at(m["h23-p1"], Rat(0), Rat(0), Rat(0), Rat(0), Rat(1));
        m["p2-defo0"] = at(m["h23-p2"], Rat(1), Rat(0), Rat(0), Rat(0), Rat(0));
        // normalized so that the (2,2) entry is 2p l2^3 + 3p_y l2^2 - ...
        m["p2-defo3"] = at(m["h23-p2"], Rat(0), Rat(0), Rat(0), Rat(3, 2), Rat(0));
        m["p2-defo4"] = at(m["h23-p2"], Rat(0), Rat(0), Rat(0), Rat(0), Rat(1));
    }
    return m;
}

} // namespace

BracketStructure representative(const std::string& name) {
    auto& m = catalog();
    auto it = m.find(name);
    if (it == m.end()) throw std::runtime_error("unknown representative: " + name);
    return it->second;
}

std::vector<std::string> representative_names() {
    std::vector<std::string> r;
    for (auto& [k, v] : catalog()) r.push_back(k);
    return r;
}

namespace {

FuncTerm ft(const char* pre, const char* slot, int dp = 0, int dq = 0) {
    return FuncTerm{parse_diffpoly(pre), slot, dp, dq};
}

std::vector<Functional> functionals_p1() {
    return {
        {"f1", {ft("1", "D^{2,221}_{11}")}},
        {"f2", {ft("1", "D^{1,112}_{22}")}},
        {"f3", {ft("1", "A^{222}_{11}")}},
        {"f4", {ft("1", "A^{111}_{22}")}},
    };
}

std::vector<Functional> functionals_p2() {
    std::vector<Functional> f;
    f.push_back({"b0",
                 {ft("1", "A^{122}_{11}"), ft("-2/3", "A^{222}_{12}")}});
    f.push_back({"b1",
                 {ft("13/18", "D^{1,221}_{11}"), ft("-2/9", "D^{1,222}_{12}"),
                  ft("-2/9", "D^{2,112}_{11}"), ft("-7/9", "D^{2,121}_{11}"),
                  ft("4/9", "D^{2,122}_{12}"), ft("-1/3", "D^{2,221}_{12}"),
                  ft("-4/3", "E^{122,2}_{12}"), ft("-4/3", "E^{222,1}_{12}")}});
    f.push_back({"b2",
                 {ft("1/4", "D^{1,221}_{11}"), ft("1/2", "D^{2,121}_{11}"),
                  ft("-1/2", "D^{2,221}_{12}")}});
    f.push_back({"b3",
                 {ft("1", "B^{22,11}_{12}"), ft("1/2", "D^{1,112}_{11}"),
                  ft("1", "D^{1,121}_{11}"), ft("-2", "D^{1,122}_{12}"),
                  ft("1/2", "D^{1,222}_{22}"), ft("-1/2", "D^{2,111}_{11}"),
                  ft("-1", "D^{2,112}_{12}"), ft("1", "D^{2,122}_{22}"),
                  ft("-1/2", "D^{2,221}_{22}"), ft("-3", "E^{122,1}_{12}")}});
    f.push_back({"b4", {ft("1", "A^{222}_{11}")}});
    return f;
}

std::vector<Functional> functionals_plp() {
    std::vector<Functional> f;
    f.push_back(
        {"jc1",
         {ft("4*p^3*q^2", "A^{111}_{11}"), ft("-10*p^4*q", "A^{111}_{12}"),
          ft("6*p^5", "A^{111}_{22}"), ft("6*p^2*q^3", "A^{112}_{11}"),
          ft("-18*p^3*q^2", "A^{112}_{12}"), ft("12*p^4*q", "A^{112}_{22}"),
          ft("-6*p^2*q^3", "A^{122}_{12}"), ft("6*p^3*q^2", "A^{122}_{22}"),
          ft("-2*q^5", "A^{222}_{11}"), ft("2*p*q^4", "A^{222}_{12}")}});
    f.push_back(
        {"jc2",
         {ft("-2*p^3*q^2", "A^{111}_{11}"), ft("6*p^4*q", "A^{111}_{12}"),
          ft("-4*p^5", "A^{111}_{22}"), ft("6*p^3*q^2", "A^{112}_{12}"),
          ft("-6*p^4*q", "A^{112}_{22}"), ft("6*p*q^4", "A^{122}_{11}"),
          ft("-6*p^2*q^3", "A^{122}_{12}"), ft("4*q^5", "A^{222}_{11}"),
          ft("-6*p*q^4", "A^{222}_{12}"), ft("2*p^2*q^3", "A^{222}_{22}")}});
    f.push_back(
        {"jc3",
         {ft("-62/7*p^3*q^2", "A^{111}_{11}"), ft("66/7*p^4*q^2", "A^{111}_{11}", 1, 0),
          ft("-137/7*p^3*q^3", "A^{111}_{11}", 0, 1), ft("-80/7*p^4*q", "A^{111}_{12}"),
          ft("-120/7*p^5*q", "A^{111}_{12}", 1, 0), ft("-36/7*p^4*q^2", "A^{111}_{12}", 0, 1),
          ft("-16/7*p^5", "A^{111}_{22}"), ft("136/7*p^6", "A^{111}_{22}", 1, 0),
          ft("204/7*p^5*q", "A^{111}_{22}", 0, 1), ft("-363/7*p^2*q^3", "A^{112}_{11}"),
          ft("354/7*p^3*q^3", "A^{112}_{11}", 1, 0), ft("-381/7*p^2*q^4", "A^{112}_{11}", 0, 1),
          ft("228/7*p^3*q^2", "A^{112}_{12}"), ft("-312/7*p^4*q^2", "A^{112}_{12}", 1, 0),
          ft("54*p^3*q^3", "A^{112}_{12}", 0, 1), ft("132/7*p^4*q", "A^{112}_{22}"),
          ft("72/7*p^5*q", "A^{112}_{22}", 1, 0), ft("36/7*p^4*q^2", "A^{112}_{22}", 0, 1),
          ft("-48*p*q^4", "A^{122}_{11}"), ft("510/7*p^2*q^4", "A^{122}_{11}", 1, 0),
          ft("-351/7*p*q^5", "A^{122}_{11}", 0, 1), ft("396/7*p^2*q^3", "A^{122}_{12}"),
          ft("-396/7*p^3*q^3", "A^{122}_{12}", 1, 0), ft("384/7*p^2*q^4", "A^{122}_{12}", 0, 1),
          ft("-255/7*q^5", "A^{222}_{11}"), ft("90*p*q^5", "A^{222}_{11}", 1, 0),
          ft("197/7*q^6", "A^{222}_{11}", 0, 1), ft("16/7*p*q^4", "A^{222}_{12}"),
          ft("-404/7*p^2*q^4", "A^{222}_{12}", 1, 0), ft("-22/7*p*q^5", "A^{222}_{12}", 0, 1),
          ft("-32/7*p^5*q", "B^{11,11}_{12}"), ft("276/7*p^3*q^3", "B^{11,22}_{12}"),
          ft("-160/7*p^4*q^2", "B^{12,11}_{12}"), ft("-24/7*p^3*q^3", "B^{12,21}_{12}"),
          ft("184/7*p^2*q^4", "B^{12,22}_{12}"), ft("-288/7*p^3*q^3", "B^{22,11}_{12}"),
          ft("48/7*p^2*q^4", "B^{22,12}_{12}"), ft("24/7*p^2*q^4", "B^{22,21}_{12}"),
          ft("164/7*p*q^5", "B^{22,22}_{12}"), ft("136/7*p^5*q", "D^{1,111}_{12}"),
          ft("-16*p^6", "D^{1,111}_{22}"), ft("-24/7*p^3*q^3", "D^{1,221}_{12}"),
          ft("-40*p*q^5", "D^{1,222}_{11}"), ft("208/7*p^3*q^3", "D^{1,222}_{22}"),
          ft("208/7*p^3*q^3", "D^{2,111}_{11}"), ft("-48/7*p^4*q^2", "D^{2,111}_{12}"),
          ft("-16*p^5*q", "D^{2,111}_{22}"), ft("-40*q^6", "D^{2,222}_{11}"),
          ft("256/7*p*q^5", "D^{2,222}_{12}")}});
    f.push_back(
        {"jc4",
         {ft("510/7*p^3*q^2", "A^{111}_{11}"), ft("-290/7*p^4*q^2", "A^{111}_{11}", 1, 0),
          ft("501/7*p^3*q^3", "A^{111}_{11}", 0, 1), ft("-480/7*p^4*q", "A^{111}_{12}"),
          ft("456/7*p^5*q", "A^{111}_{12}", 1, 0), ft("372/7*p^4*q^2", "A^{111}_{12}", 0, 1),
          ft("688/7*p^5", "A^{111}_{22}"), ft("-360/7*p^6", "A^{111}_{22}", 1, 0),
          ft("-540/7*p^5*q", "A^{111}_{22}", 0, 1), ft("1791/7*p^2*q^3", "A^{112}_{11}"),
          ft("-1698/7*p^3*q^3", "A^{112}_{11}", 1, 0),
          ft("1977/7*p^2*q^4", "A^{112}_{11}", 0, 1), ft("-1572/7*p^3*q^2", "A^{112}_{12}"),
          ft("1656/7*p^4*q^2", "A^{112}_{12}", 1, 0), ft("-222*p^3*q^3", "A^{112}_{12}", 0, 1),
          ft("204/7*p^4*q", "A^{112}_{22}"), ft("-744/7*p^5*q", "A^{112}_{22}", 1, 0),
          ft("-372/7*p^4*q^2", "A^{112}_{22}", 0, 1), ft("216*p*q^4", "A^{122}_{11}"),
          ft("-2526/7*p^2*q^4", "A^{122}_{11}", 1, 0),
          ft("2451/7*p*q^5", "A^{122}_{11}", 0, 1), ft("-1740/7*p^2*q^3", "A^{122}_{12}"),
          ft("1740/7*p^3*q^3", "A^{122}_{12}", 1, 0),
          ft("-2400/7*p^2*q^4", "A^{122}_{12}", 0, 1), ft("1459/7*q^5", "A^{222}_{11}"),
          ft("-538*p*q^5", "A^{222}_{11}", 1, 0), ft("-1121/7*q^6", "A^{222}_{11}", 0, 1),
          ft("96/7*p*q^4", "A^{222}_{12}"), ft("2084/7*p^2*q^4", "A^{222}_{12}", 1, 0),
          ft("-34/7*p*q^5", "A^{222}_{12}", 0, 1), ft("-192/7*p^5*q", "B^{11,11}_{12}"),
          ft("-1284/7*p^3*q^3", "B^{11,22}_{12}"), ft("608/7*p^4*q^2", "B^{12,11}_{12}"),
          ft("248/7*p^3*q^3", "B^{12,21}_{12}"), ft("-856/7*p^2*q^4", "B^{12,22}_{12}"),
          ft("1408/7*p^3*q^3", "B^{22,11}_{12}"), ft("-496/7*p^2*q^4", "B^{22,12}_{12}"),
          ft("-248/7*p^2*q^4", "B^{22,21}_{12}"), ft("-1172/7*p*q^5", "B^{22,22}_{12}"),
          ft("-360/7*p^5*q", "D^{1,111}_{12}"), ft("16*p^6", "D^{1,111}_{22}"),
          ft("248/7*p^3*q^3", "D^{1,221}_{12}"), ft("264*p*q^5", "D^{1,222}_{11}"),
          ft("-1104/7*p^3*q^3", "D^{1,222}_{22}"), ft("-1104/7*p^3*q^3", "D^{2,111}_{11}"),
          ft("496/7*p^4*q^2", "D^{2,111}_{12}"), ft("16*p^5*q", "D^{2,111}_{22}"),
          ft("264*q^6", "D^{2,222}_{11}"), ft("-1600/7*p*q^5", "D^{2,222}_{12}")}});
    return f;
}

} // namespace

std::vector<Functional> coboundary_functionals(const std::string& base) {
    if (base == "p1") return functionals_p1();
    if (base == "p2") return functionals_p2();
    if (base == "plp") return functionals_plp();
    throw std::runtime_error("no functionals for base: " + base);
}

DiffPoly eval_functional(const Functional& f,
                         const std::map<std::string, DiffPoly>& slots) {
    DiffPoly r;
    for (auto& t : f.terms) {
        auto it = slots.find(t.slot);
        if (it == slots.end()) continue;
        DiffPoly v = it->second;
        for (int i = 0; i < t.dp; ++i) v = v.partial(0, 0, 0);
        for (int i = 0; i < t.dq; ++i) v = v.partial(1, 0, 0);
        r += t.pre * v;
    }
    return r;
}

EvoField parametric_miura_field() {
    EvoField x;
    for (int i = 0; i < 2; ++i) {
        DiffPoly xi;
        for (int a = 0; a < 2; ++a)
            for (int b = a; b < 2; ++b)
                for (int l = 0; l < 2; ++l) {
                    std::string name = std::string("f^{") + dg(a) + dg(b) + dg(l) + "," +
                                       dg(i) + "}";
                    DiffPoly jet = DiffPoly::jet(l, (a == 0) + (b == 0),
                                                 (a == 1) + (b == 1));
                    xi += jet * Coeff::unknown(intern_symbol(name));
                }
        std::vector<std::pair<int, int>> pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (std::size_t u = 0; u < pairs.size(); ++u)
            for (std::size_t v = u; v < pairs.size(); ++v) {
                auto [a, l] = pairs[u];
                auto [b, mc] = pairs[v];
                std::string name = std::string("g^{") + dg(a) + dg(l) + "," + dg(b) +
                                   dg(mc) + "," + dg(i) + "}";
                DiffPoly jets = DiffPoly::jet(l, a == 0, a == 1) *
                                DiffPoly::jet(mc, b == 0, b == 1);
                xi += jets * Coeff::unknown(intern_symbol(name));
            }
        x.X[static_cast<std::size_t>(i)] = xi;
    }
    return x;
}

NontrivialityCertificate certify_nontrivial(const std::string& base,
                                            const BracketStructure& rep,
                                            std::size_t expected_rank) {
    NontrivialityCertificate cert;
    BracketStructure p = base_structure(base);
    if (!is_skew(rep)) {
        cert.failure = "representative is not skewsymmetric";
        return cert;
    }
    cert.cocycle = d_on_2cochain(p, rep).is_zero();
    if (!cert.cocycle) {
        cert.failure = "representative is not a cocycle";
        return cert;
    }
    auto funcs = coboundary_functionals(base);
    // the functionals must vanish identically on every exact bracket
    BracketStructure cb = d_on_field(p, parametric_miura_field());
    auto cbslots = extract_coefficients(cb);
    cert.functionals_vanish_on_coboundaries = true;
    for (auto& f : funcs) {
        DiffPoly v = eval_functional(f, cbslots);
        if (!v.is_zero()) {
            cert.functionals_vanish_on_coboundaries = false;
            cert.failure = "functional " + f.name + " does not vanish on coboundaries: " +
                           print_diffpoly(v);
            return cert;
        }
    }
    auto slots = extract_coefficients(rep);
    std::vector<DiffPoly> vals;
    for (auto& f : funcs) {
        cert.functional_names.push_back(f.name);
        vals.push_back(eval_functional(f, slots));
    }
    cert.functional_values = vals;
    cert.rank = rank_over_constants(vals);
    if (cert.rank != expected_rank)
        cert.failure = "functional rank " + std::to_string(cert.rank) +
                       " differs from expected " + std::to_string(expected_rank);
    return cert;
}

std::array<DiffPoly, 2> hamiltonian_flow(const BracketStructure& p, const DiffPoly& h) {
    std::array<DiffPoly, 2> flow;
    for (int i = 0; i < 2; ++i)
        flow[static_cast<std::size_t>(i)] =
            master_bracket(p, h, DiffPoly::jet(i, 0, 0)).coefficient(0, 0);
    return flow;
}

std::vector<long long> cohomology_dims(int p, int dmax) {
    auto hseries = [&](int k) {
        std::vector<long long> s(static_cast<std::size_t>(dmax) + 1, 0);
        int off = k * (k - 1) / 2;
        if (off <= dmax) s[static_cast<std::size_t>(off)] = 1;
        for (int i = 2; i <= k; ++i)
            for (int d = i; d <= dmax; ++d)
                s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - i)];
        if (k == 0 && dmax >= 1) s[1] += 1;
        return s;
    };
    auto a = hseries(p), b = hseries(p + 1);
    std::vector<long long> r(static_cast<std::size_t>(dmax));
    for (int d = 1; d <= dmax; ++d)
        r[static_cast<std::size_t>(d - 1)] =
            2 * (a[static_cast<std::size_t>(d)] + b[static_cast<std::size_t>(d)]);
    return r;
}

} // namespace pvalab
