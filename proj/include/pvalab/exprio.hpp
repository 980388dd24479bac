#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvalab/lambda.hpp"

namespace pvalab {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Minimal arithmetic AST.
struct ExprAst {
    enum class Kind { Sum, Sub, Mul, Div, Pow, Neg, Number, Jet, Lambda, Mu, Const };
    Kind kind;
    Rat number;                 // Number
    int a = 0, b = 0;           // Jet: comp/m with n in b... see fields below
    int comp = 0, m = 0, n = 0; // Jet
    int axis = 0;               // Lambda / Mu (0 or 1)
    int cidx = 0;               // Const c0..c4
    long long exponent = 0;     // Pow
    std::vector<std::unique_ptr<ExprAst>> kids;
};

std::unique_ptr<ExprAst> parse(const std::string& text);

// Lowering. lower_bivalue accepts lambda/mu atoms; lower_diffpoly rejects them.
BiValue lower_bivalue(const ExprAst& ast);
DiffPoly lower_diffpoly(const ExprAst& ast);

// Convenience: parse-and-lower.
BiValue parse_bivalue(const std::string& text);
DiffPoly parse_diffpoly(const std::string& text);

// Canonical printers; parse(print(v)) == v for unknown-free values.
std::string print_rat(const Rat& r);
std::string print_diffpoly(const DiffPoly& p);
std::string print_bivalue(const BiValue& v);

// Bracket data files: blocks "[i,j] = <expr>" with 1-based indices.
BracketStructure parse_bracket_file(const std::string& text);
std::string print_bracket_file(const BracketStructure& b);
BracketStructure load_bracket_file(const std::string& path);

// JSON claim reports (schema "pva-lab/1").
struct ClaimResult {
    std::string claim_id;
    std::string paper_anchor;
    std::string status; // pass | fail | inconclusive
    std::string witness;
    long long runtime_ms = 0;
    std::optional<int> prolongation_bound;
};
std::string report(const std::vector<ClaimResult>& results);

// Location of the shipped data files (overridable via PVA_LAB_DATA_DIR).
std::string data_dir();

} // namespace pvalab
