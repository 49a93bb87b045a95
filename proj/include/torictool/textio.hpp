#pragma once

#include "torictool/jet.hpp"
#include "torictool/symbols.hpp"

#include <string>
#include <variant>
#include <vector>

namespace torictool {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string &msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

// line-oriented phase files:
//   symbols <name> <name> ...
//   phi <j> = <term> (+|-) <term> ...
// term := rational | rational '*' symbol | symbol; '#' starts a comment
PhaseVector parse_phase_file(const std::string &text);

std::string print_phase_file(const PhaseVector &phi);

// number literal: exact rational or decimal (numeric mode)
struct NumberLit {
    bool is_rational = true;
    Rat rational;
    std::string decimal;
};

struct GermLambda {
    bool is_phase = false;
    GaussianRational exact;
    int phase_index = 0; // 1-based coordinate of the linked PhaseVector
};

struct GermTerm {
    int coordinate = 1; // 1-based
    MultiIndex monomial;
    NumberLit re, im;
};

// germ / vector-field files:
//   dim <n>; maxdeg <D>;
//   lambda <j> = exact <re> + <im> I | phase <k>
//   eps <j> = 0|1
//   term <j> (<q1>,...,<qn>) <re> + <im> I
struct ParsedGerm {
    int n = 0;
    int D = 1;
    std::vector<GermLambda> lambda;
    std::vector<int> eps;
    std::vector<GermTerm> terms;

    bool exact_mode() const;
};

ParsedGerm parse_germ_file(const std::string &text);

std::string print_germ_file(const ParsedGerm &g);

// builders; throw std::invalid_argument on constraint violations
JetMap<GaussianRational> build_exact_jet(const ParsedGerm &g);
JetMap<BigComplex> build_numeric_jet(const ParsedGerm &g, const std::optional<PhaseVector> &phases,
                                     long prec);

JetField<GaussianRational> build_exact_field(const ParsedGerm &g);
JetField<BigComplex> build_numeric_field(const ParsedGerm &g, const std::optional<PhaseVector> &phases,
                                         long prec);

// well-known symbol names (sqrtN, i, pi, e) resolve automatically; explicit
// assignments override
BigComplex resolve_symbol_value(const std::string &name, const std::string &assigned, long prec);

} // namespace torictool
