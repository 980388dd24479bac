#include "pvalab/exprio.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pvalab {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoll(s.substr(start, pos - start));
    }

    std::unique_ptr<ExprAst> make(ExprAst::Kind k) {
        auto n = std::make_unique<ExprAst>();
        n->kind = k;
        return n;
    }

    std::unique_ptr<ExprAst> expr() {
        auto lhs = term();
        for (;;) {
            if (eat('+')) {
                auto n = make(ExprAst::Kind::Sum);
                n->kids.push_back(std::move(lhs));
                n->kids.push_back(term());
                lhs = std::move(n);
            } else if (peek() == '-' ) {
                ++pos;
                auto n = make(ExprAst::Kind::Sub);
                n->kids.push_back(std::move(lhs));
                n->kids.push_back(term());
                lhs = std::move(n);
            } else
                return lhs;
        }
    }

    std::unique_ptr<ExprAst> term() {
        auto lhs = factor();
        for (;;) {
            if (eat('*')) {
                auto n = make(ExprAst::Kind::Mul);
                n->kids.push_back(std::move(lhs));
                n->kids.push_back(factor());
                lhs = std::move(n);
            } else if (peek() == '/') {
                std::size_t at = pos;
                ++pos;
                auto n = make(ExprAst::Kind::Div);
                n->exponent = static_cast<long long>(at); // remember position
                n->kids.push_back(std::move(lhs));
                n->kids.push_back(factor());
                lhs = std::move(n);
            } else
                return lhs;
        }
    }

    std::unique_ptr<ExprAst> factor() {
        if (eat('-')) {
            auto n = make(ExprAst::Kind::Neg);
            n->kids.push_back(factor());
            return n;
        }
        auto base = atom();
        if (peek() == '^') {
            std::size_t at = pos;
            ++pos;
            long long e;
            if (eat('(')) {
                e = integer();
                if (!eat(')')) fail("expected ')'");
            } else
                e = integer();
            auto n = make(ExprAst::Kind::Pow);
            n->exponent = e;
            n->cidx = static_cast<int>(at); // position, for error reports
            n->kids.push_back(std::move(base));
            return n;
        }
        return base;
    }

    std::unique_ptr<ExprAst> atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            auto n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            auto n = make(ExprAst::Kind::Number);
            n->number = Rat(v);
            return n;
        }
        if (c == 'p' || c == 'q') {
            ++pos;
            auto n = make(ExprAst::Kind::Jet);
            n->comp = (c == 'p') ? 0 : 1;
            if (pos < s.size() && s[pos] == '[') {
                ++pos;
                n->m = static_cast<int>(integer());
                if (!eat(',')) fail("expected ','");
                n->n = static_cast<int>(integer());
                if (!eat(']')) fail("expected ']'");
                if (n->m < 0 || n->n < 0) fail("negative jet order");
            }
            return n;
        }
        if (c == 'l' || c == 'm') {
            if (pos + 1 < s.size() && (s[pos + 1] == '1' || s[pos + 1] == '2')) {
                auto n = make(c == 'l' ? ExprAst::Kind::Lambda : ExprAst::Kind::Mu);
                n->axis = s[pos + 1] - '1';
                pos += 2;
                return n;
            }
        }
        if (c == 'c' && pos + 1 < s.size() && s[pos + 1] >= '0' &&
            s[pos + 1] <= char('0' + kNumConstants - 1)) {
            auto n = make(ExprAst::Kind::Const);
            n->cidx = s[pos + 1] - '0';
            pos += 2;
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

// Invert a value that is a single rational multiple of a zero-jet monomial.
BiValue invert_monomial(const BiValue& v, std::size_t at) {
    if (v.terms.size() != 1) throw ParseError("illegal division: divisor not a monomial", at);
    auto& [k, p] = *v.terms.begin();
    if (k != LKey{}) throw ParseError("illegal division: divisor contains lambda/mu", at);
    if (p.terms.size() != 1)
        throw ParseError("illegal division: divisor not a monomial", at);
    auto& [mo, c] = *p.terms.begin();
    if (!mo.jets.empty())
        throw ParseError("illegal division: divisor contains positive-order jets", at);
    if (!c.is_rational())
        throw ParseError("illegal division: divisor not rational in p,q", at);
    Mono inv;
    inv.ep = -mo.ep;
    inv.eq = -mo.eq;
    DiffPoly r;
    r.terms.emplace(inv, Coeff(Rat(1) / c.rational_value()));
    BiValue out;
    out.terms.emplace(LKey{}, std::move(r));
    return out;
}

BiValue lower(const ExprAst& a, bool allow_lambda) {
    using K = ExprAst::Kind;
    switch (a.kind) {
    case K::Sum: return lower(*a.kids[0], allow_lambda) + lower(*a.kids[1], allow_lambda);
    case K::Sub: return lower(*a.kids[0], allow_lambda) - lower(*a.kids[1], allow_lambda);
    case K::Mul: return lower(*a.kids[0], allow_lambda) * lower(*a.kids[1], allow_lambda);
    case K::Div:
        return lower(*a.kids[0], allow_lambda) *
               invert_monomial(lower(*a.kids[1], allow_lambda),
                               static_cast<std::size_t>(a.exponent));
    case K::Neg: return -lower(*a.kids[0], allow_lambda);
    case K::Pow: {
        BiValue base = lower(*a.kids[0], allow_lambda);
        long long e = a.exponent;
        if (e < 0) {
            base = invert_monomial(base, static_cast<std::size_t>(a.cidx));
            e = -e;
        }
        BiValue out{DiffPoly(Rat(1))};
        for (long long i = 0; i < e; ++i) out = out * base;
        return out;
    }
    case K::Number: return BiValue{DiffPoly(a.number)};
    case K::Jet: return BiValue{DiffPoly::jet(a.comp, a.m, a.n)};
    case K::Lambda:
    case K::Mu: {
        if (!allow_lambda)
            throw ParseError("lambda/mu not allowed in this context", 0);
        BiValue v{DiffPoly(Rat(1))};
        return v.mul_var(a.axis, a.kind == K::Mu);
    }
    case K::Const: return BiValue{DiffPoly(Coeff::constant(a.cidx))};
    }
    throw std::logic_error("unreachable");
}

void append_pow(std::string& out, const std::string& name, long long e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
}

} // namespace

std::unique_ptr<ExprAst> parse(const std::string& text) {
    Parser p(text);
    auto ast = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return ast;
}

BiValue lower_bivalue(const ExprAst& ast) { return lower(ast, true); }

DiffPoly lower_diffpoly(const ExprAst& ast) {
    BiValue v = lower(ast, false);
    if (v.is_zero()) return DiffPoly();
    return v.terms.begin()->second;
}

BiValue parse_bivalue(const std::string& text) { return lower_bivalue(*parse(text)); }
DiffPoly parse_diffpoly(const std::string& text) { return lower_diffpoly(*parse(text)); }

std::string print_rat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

namespace {

// One flattened product: rational times a factor string (possibly empty).
struct Piece {
    Rat coef;
    std::string factors;
};

void flatten_diffpoly(const DiffPoly& p, std::vector<Piece>& out) {
    for (auto& [mo, c] : p.terms) {
        for (auto& [cm, r] : c.terms) {
            std::string f;
            for (int i = 0; i < kNumConstants; ++i)
                append_pow(f, "c" + std::to_string(i), cm.ce[static_cast<std::size_t>(i)]);
            if (cm.has_unknown()) {
                std::string nm = symbol_name(cm.sym);
                if (cm.dp || cm.dq)
                    nm += "_d[" + std::to_string(cm.dp) + "," + std::to_string(cm.dq) + "]";
                if (!f.empty()) f += "*";
                f += nm;
            }
            append_pow(f, "p", mo.ep);
            append_pow(f, "q", mo.eq);
            for (auto& jf : mo.jets) {
                std::string nm = (jf.v.comp == 0 ? "p[" : "q[") + std::to_string(jf.v.m) +
                                 "," + std::to_string(jf.v.n) + "]";
                append_pow(f, nm, jf.pow);
            }
            out.push_back(Piece{r, std::move(f)});
        }
    }
}

std::string pieces_to_string(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        Rat a = pc.coef < 0 ? Rat(-pc.coef) : pc.coef;
        bool neg = pc.coef < 0;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1 || pc.factors.empty()) {
            out += print_rat(a);
            if (!pc.factors.empty()) out += "*";
        }
        out += pc.factors;
    }
    return out;
}

} // namespace

std::string print_diffpoly(const DiffPoly& p) {
    std::vector<Piece> pieces;
    flatten_diffpoly(p, pieces);
    return pieces_to_string(pieces);
}

std::string print_bivalue(const BiValue& v) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, p] : v.terms) {
        std::string lam;
        append_pow(lam, "l1", k.l1);
        append_pow(lam, "l2", k.l2);
        append_pow(lam, "m1", k.m1);
        append_pow(lam, "m2", k.m2);
        std::string body;
        if (lam.empty())
            body = print_diffpoly(p);
        else
            body = lam + "*(" + print_diffpoly(p) + ")";
        if (!first) out += " + ";
        out += body;
        first = false;
    }
    return out;
}

BracketStructure parse_bracket_file(const std::string& text) {
    BracketStructure b;
    std::size_t i = 0;
    bool seen[kNumComponents][kNumComponents] = {};
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        if (text[i] == '#') { // comment line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (text[i] != '[') throw ParseError("expected '[i,j]' block header", i);
        std::size_t close = text.find(']', i);
        std::size_t eq = text.find('=', i);
        if (close == std::string::npos || eq == std::string::npos || close > eq)
            throw ParseError("malformed block header", i);
        std::string hdr = text.substr(i + 1, close - i - 1);
        int bi, bj;
        char comma;
        std::istringstream hs(hdr);
        if (!(hs >> bi >> comma >> bj) || comma != ',' || bi < 1 || bi > kNumComponents ||
            bj < 1 || bj > kNumComponents)
            throw ParseError("bad block indices", i);
        std::size_t next = text.find("\n[", eq);
        std::string body = text.substr(eq + 1, (next == std::string::npos ? text.size() : next) -
                                                   eq - 1);
        b(bi - 1, bj - 1) = parse_bivalue(body);
        seen[bi - 1][bj - 1] = true;
        i = (next == std::string::npos) ? text.size() : next + 1;
    }
    (void)seen; // missing blocks default to zero
    return b;
}

std::string print_bracket_file(const BracketStructure& b) {
    std::string out;
    for (int i = 0; i < kNumComponents; ++i)
        for (int j = 0; j < kNumComponents; ++j) {
            out += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = ";
            out += print_bivalue(b(i, j));
            out += "\n";
        }
    return out;
}

BracketStructure load_bracket_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bracket file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bracket_file(ss.str());
}

std::string report(const std::vector<ClaimResult>& results) {
    nlohmann::ordered_json doc;
    doc["schema"] = "pva-lab/1";
    auto& arr = doc["results"] = nlohmann::ordered_json::array();
    for (auto& r : results) {
        nlohmann::ordered_json j;
        j["claim_id"] = r.claim_id;
        j["paper_anchor"] = r.paper_anchor;
        j["status"] = r.status;
        j["witness"] = r.witness;
        j["runtime_ms"] = r.runtime_ms;
        if (r.prolongation_bound) j["prolongation_bound"] = *r.prolongation_bound;
        arr.push_back(std::move(j));
    }
    return doc.dump(2);
}

std::string data_dir() {
    if (const char* env = std::getenv("PVA_LAB_DATA_DIR")) return env;
    return PVALAB_DATA_DIR;
}

} // namespace pvalab
