#include "pvalab/linsys.hpp"

#include <algorithm>

#include "pvalab/exprio.hpp"

namespace pvalab {

std::string ukey_name(const UKey& k) {
    std::string s = symbol_name(k.sym);
    if (k.dp || k.dq)
        s += "_d[" + std::to_string(k.dp) + "," + std::to_string(k.dq) + "]";
    return s;
}

LinForm LinForm::derivative(int comp) const {
    LinForm out;
    out.cst = cst.partial(comp, 0, 0);
    for (auto& [k, c] : lin) {
        out.add_lin(k, c.partial(comp, 0, 0));
        UKey nk = k;
        (comp == 0 ? nk.dp : nk.dq) += 1;
        out.add_lin(nk, c);
    }
    return out;
}

std::string print_linform(const LinForm& f) {
    std::string s;
    for (auto& [k, c] : f.lin) {
        if (!s.empty()) s += " + ";
        s += "(" + print_diffpoly(c) + ")*" + ukey_name(k);
    }
    if (!f.cst.is_zero() || s.empty()) {
        if (!s.empty()) s += " + ";
        s += print_diffpoly(f.cst);
    }
    return s;
}

void collect_into(const DiffPoly& value, std::map<std::vector<JetFactor>, LinForm>& out) {
    for (auto& [mo, c] : value.terms) {
        Mono laurent;
        laurent.ep = mo.ep;
        laurent.eq = mo.eq;
        LinForm& f = out[mo.jets];
        for (auto& [cm, r] : c.terms) {
            if (cm.has_unknown()) {
                CMono base;
                base.ce = cm.ce;
                DiffPoly d;
                Coeff cc;
                cc.add_term(base, r);
                d.add_term(laurent, cc);
                f.add_lin(UKey{cm.sym, cm.dp, cm.dq}, d);
            } else {
                Coeff cc;
                cc.add_term(cm, r);
                DiffPoly d;
                d.add_term(laurent, cc);
                f.cst += d;
            }
        }
    }
}

LinearSystem collect(const BiValue& v) {
    LinearSystem sys;
    for (auto& [k, p] : v.terms) {
        std::map<std::vector<JetFactor>, LinForm> groups;
        collect_into(p, groups);
        for (auto& [jets, f] : groups) sys.add(std::move(f));
    }
    return sys;
}

LinearSystem collect(const BracketStructure& b) {
    LinearSystem sys;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j) {
            LinearSystem part = collect(b(i, j));
            for (auto& e : part.eqs) sys.add(std::move(e));
        }
    return sys;
}

LinearSystem collect(const TriValue& t) {
    LinearSystem sys;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j)
            for (int k = 0; k < kNumComponents; ++k) {
                LinearSystem part = collect(t(i, j, k));
                for (auto& e : part.eqs) sys.add(std::move(e));
            }
    return sys;
}

LinearSystem prolong(const LinearSystem& sys, int k) {
    // original equations plus all d/dp^a d/dq^b with 1 <= a+b <= k
    LinearSystem result;
    for (auto& e : sys.eqs) result.add(e);
    for (auto& e : sys.eqs)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b) {
                if (a + b == 0) continue;
                LinForm d = e;
                for (int t = 0; t < a; ++t) d = d.derivative(0);
                for (int t = 0; t < b; ++t) d = d.derivative(1);
                result.add(std::move(d));
            }
    return result;
}

namespace {

// gcd of two non-negative rationals: gcd of numerators over lcm of denominators
Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    BigInt na = numerator(a), nb = numerator(b);
    BigInt da = denominator(a), db = denominator(b);
    BigInt gn = gcd(na < 0 ? BigInt(-na) : na, nb < 0 ? BigInt(-nb) : nb);
    BigInt ld = da / gcd(da, db) * db;
    return Rat(gn, ld);
}

struct RowContent {
    Rat r{0};
    std::int32_t minp = 0, minq = 0;
    bool any = false;
    void absorb(const DiffPoly& d) {
        for (auto& [mo, c] : d.terms)
            for (auto& [cm, rr] : c.terms) {
                r = rat_gcd(r, rr < 0 ? Rat(-rr) : rr);
                if (!any) {
                    minp = mo.ep;
                    minq = mo.eq;
                    any = true;
                } else {
                    minp = std::min(minp, mo.ep);
                    minq = std::min(minq, mo.eq);
                }
            }
    }
};

DiffPoly strip(const DiffPoly& d, const Rat& r, std::int32_t mp, std::int32_t mq) {
    DiffPoly out;
    for (auto& [mo, c] : d.terms) {
        Mono nm = mo;
        nm.ep -= mp;
        nm.eq -= mq;
        Coeff nc;
        for (auto& [cm, rr] : c.terms) nc.add_term(cm, rr / r);
        out.add_term(nm, nc);
    }
    return out;
}

struct Row {
    LinForm f;
    std::map<std::size_t, DiffPoly> comb;
    bool active = true;

    void normalize(bool track) {
        RowContent ct;
        for (auto& [k, c] : f.lin) ct.absorb(c);
        ct.absorb(f.cst);
        if (track)
            for (auto& [i, c] : comb) ct.absorb(c);
        if (!ct.any || ct.r == 0) return;
        LinForm nf;
        for (auto& [k, c] : f.lin) nf.lin.emplace(k, strip(c, ct.r, ct.minp, ct.minq));
        nf.cst = strip(f.cst, ct.r, ct.minp, ct.minq);
        f = std::move(nf);
        if (track) {
            std::map<std::size_t, DiffPoly> nc;
            for (auto& [i, c] : comb) nc.emplace(i, strip(c, ct.r, ct.minp, ct.minq));
            comb = std::move(nc);
        }
    }
};

std::size_t weight(const LinForm& f) {
    std::size_t w = 0;
    for (auto& [k, c] : f.lin) w += c.terms.size();
    return w;
}

} // namespace

ConsistencyResult consistency(const LinearSystem& sys, bool track) {
    std::vector<Row> rows;
    rows.reserve(sys.eqs.size());
    for (std::size_t i = 0; i < sys.eqs.size(); ++i) {
        Row r;
        r.f = sys.eqs[i];
        if (track) r.comb.emplace(i, DiffPoly(Rat(1)));
        r.normalize(track);
        rows.push_back(std::move(r));
    }
    ConsistencyResult res;
    for (;;) {
        // pick the active row with unknowns of least weight
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].active || rows[i].f.lin.empty()) continue;
            if (best == rows.size() ||
                std::pair(rows[i].f.lin.size(), weight(rows[i].f)) <
                    std::pair(rows[best].f.lin.size(), weight(rows[best].f)))
                best = i;
        }
        if (best == rows.size()) break;
        Row& piv = rows[best];
        piv.active = false;
        ++res.rank;
        // pivot column: fewest coefficient terms
        auto pit = piv.f.lin.begin();
        for (auto it = piv.f.lin.begin(); it != piv.f.lin.end(); ++it)
            if (it->second.terms.size() < pit->second.terms.size()) pit = it;
        const UKey col = pit->first;
        const DiffPoly a = pit->second;
        for (auto& row : rows) {
            if (&row == &piv) continue;
            auto it = row.f.lin.find(col);
            if (it == row.f.lin.end()) continue;
            DiffPoly b = it->second;
            LinForm nf;
            for (auto& [k, c] : row.f.lin) nf.add_lin(k, c * a);
            nf.cst = row.f.cst * a;
            for (auto& [k, c] : piv.f.lin) nf.add_lin(k, -(c * b));
            nf.cst -= piv.f.cst * b;
            row.f = std::move(nf);
            if (track) {
                std::map<std::size_t, DiffPoly> nc;
                for (auto& [i, c] : row.comb) nc.emplace(i, c * a);
                for (auto& [i, c] : piv.comb) {
                    DiffPoly v = -(c * b);
                    auto [jt, ins] = nc.emplace(i, v);
                    if (!ins) jt->second += v;
                }
                for (auto jt = nc.begin(); jt != nc.end();)
                    jt = jt->second.is_zero() ? nc.erase(jt) : std::next(jt);
                row.comb = std::move(nc);
            }
            row.normalize(track);
        }
    }
    for (auto& row : rows) {
        if (!row.active || !row.f.lin.empty()) continue;
        if (row.f.cst.is_zero()) continue;
        res.consistent = false;
        Certificate cert;
        cert.residual = row.f.cst;
        cert.combination = row.comb;
        res.certificates.push_back(std::move(cert));
    }
    return res;
}

DiffPoly substitute(const LinForm& f, const std::map<std::int32_t, DiffPoly>& values) {
    DiffPoly out = f.cst;
    for (auto& [k, c] : f.lin) {
        auto it = values.find(k.sym);
        DiffPoly v = (it == values.end()) ? DiffPoly() : it->second;
        for (int t = 0; t < k.dp; ++t) v = v.partial(0, 0, 0);
        for (int t = 0; t < k.dq; ++t) v = v.partial(1, 0, 0);
        out += c * v;
    }
    return out;
}

bool satisfied_by(const LinearSystem& sys, const std::map<std::int32_t, DiffPoly>& values) {
    for (auto& e : sys.eqs)
        if (!substitute(e, values).is_zero()) return false;
    return true;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t rank_over_constants(const std::vector<DiffPoly>& values) {
    std::map<std::pair<Mono, CMono>, std::size_t> colidx;
    for (auto& v : values)
        for (auto& [mo, c] : v.terms)
            for (auto& [cm, r] : c.terms) colidx.emplace(std::pair(mo, cm), colidx.size());
    std::vector<std::vector<Rat>> m(values.size(), std::vector<Rat>(colidx.size(), Rat(0)));
    for (std::size_t i = 0; i < values.size(); ++i)
        for (auto& [mo, c] : values[i].terms)
            for (auto& [cm, r] : c.terms) m[i][colidx[std::pair(mo, cm)]] = r;
    return rational_rank(std::move(m));
}

BoundedSolution solve_bounded(const LinearSystem& sys, int pmin, int pmax, int qmin,
                              int qmax) {
    // scalar unknowns: one per (base symbol, window monomial)
    std::set<std::int32_t> syms;
    for (auto& k : sys.unknowns) syms.insert(k.sym);
    std::map<std::pair<std::int32_t, std::pair<int, int>>, std::size_t> scal;
    for (auto s : syms)
        for (int a = pmin; a <= pmax; ++a)
            for (int b = qmin; b <= qmax; ++b)
                scal.emplace(std::pair(s, std::pair(a, b)), scal.size());

    // falling factorial for derivative of p^a
    auto falling = [](int a, int d) {
        Rat r(1);
        for (int t = 0; t < d; ++t) r *= Rat(a - t);
        return r;
    };

    std::vector<std::vector<Rat>> mat;
    std::vector<Rat> rhs;
    for (auto& e : sys.eqs) {
        // expand into a DiffPoly linear in the scalar unknowns; we index rows
        // by (Mono, c-monomial) pairs
        std::map<std::pair<Mono, CMono>, std::pair<std::map<std::size_t, Rat>, Rat>> rows;
        auto addcell = [&](const Mono& mo, const CMono& cm, std::size_t col, const Rat& v,
                           bool constant) {
            auto& cell = rows[std::pair(mo, cm)];
            if (constant)
                cell.second += v;
            else
                cell.first[col] += v;
        };
        for (auto& [mo, c] : e.cst.terms)
            for (auto& [cm, r] : c.terms) addcell(mo, cm, 0, r, true);
        for (auto& [k, c] : e.lin)
            for (int a = pmin; a <= pmax; ++a)
                for (int b = qmin; b <= qmax; ++b) {
                    Rat fac = falling(a, k.dp) * falling(b, k.dq);
                    if (fac == 0) continue;
                    std::size_t col = scal[std::pair(k.sym, std::pair(a, b))];
                    for (auto& [mo, cc] : c.terms) {
                        Mono nm = mo;
                        nm.ep += a - k.dp;
                        nm.eq += b - k.dq;
                        for (auto& [cm, r] : cc.terms) addcell(nm, cm, col, r * fac, false);
                    }
                }
        for (auto& [key, cell] : rows) {
            std::vector<Rat> row(scal.size(), Rat(0));
            bool nz = cell.second != 0;
            for (auto& [col, v] : cell.first) {
                row[col] = v;
                if (v != 0) nz = true;
            }
            if (!nz) continue;
            mat.push_back(std::move(row));
            rhs.push_back(cell.second);
        }
    }
    BoundedSolution out;
    out.scalar_unknowns = scal.size();
    std::size_t rank_a = rational_rank(mat);
    std::vector<std::vector<Rat>> aug = mat;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    std::size_t rank_aug = rational_rank(std::move(aug));
    out.rank = rank_a;
    if (rank_aug > rank_a)
        out.dimension = std::nullopt;
    else
        out.dimension = scal.size() - rank_a;
    return out;
}

} // namespace pvalab
