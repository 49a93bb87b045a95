#include "torictool/textio.hpp"

#include <algorithm>
#include <sstream>

namespace torictool {

namespace {

struct Tok {
    std::string text;
    int col; // 1-based
};

std::vector<Tok> tokenize_line(const std::string &line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (isspace((unsigned char)line[i])) {
            ++i;
            continue;
        }
        size_t start = i;
        // punctuation tokens
        if (std::string("=+-*(),").find(line[i]) != std::string::npos) {
            // keep signed numbers together: '-' or '+' immediately followed by a digit
            // is part of the literal only where the grammar expects a value; the
            // parser folds signs instead, so always emit single-char tokens here
            out.push_back({std::string(1, line[i]), (int)start + 1});
            ++i;
            continue;
        }
        while (i < line.size() && !isspace((unsigned char)line[i])) {
            char c = line[i];
            if (std::string("#=*(),").find(c) != std::string::npos) break;
            if ((c == '+' || c == '-') && !(i > start && (line[i - 1] == 'e' || line[i - 1] == 'E') &&
                                            isdigit((unsigned char)line[start])))
                break; // sign token, except inside a decimal exponent
            ++i;
        }
        out.push_back({line.substr(start, i - start), (int)start + 1});
    }
    return out;
}

bool is_name(const std::string &s) {
    if (s.empty() || isdigit((unsigned char)s[0])) return false;
    for (char c : s)
        if (!isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

bool is_unsigned_number(const std::string &s) {
    if (s.empty()) return false;
    bool dot = false, digit = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (isdigit((unsigned char)c)) {
            digit = true;
        } else if (c == '.') {
            if (dot) return false;
            dot = true;
        } else if ((c == 'e' || c == 'E') && digit) {
            // exponent: rest must be [+-]?digits
            size_t j = i + 1;
            if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
            if (j >= s.size()) return false;
            for (; j < s.size(); ++j)
                if (!isdigit((unsigned char)s[j])) return false;
            return true;
        } else if (c == '/') {
            // rational form handled by caller
            continue;
        } else {
            return false;
        }
    }
    return digit;
}

} // namespace

PhaseVector parse_phase_file(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> names;
    bool have_symbols = false;
    std::map<int, SymbolicScalar> entries;
    SymbolBasis basis;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        size_t p = 0;
        auto fail = [&](int col, const std::string &msg) -> ParseError { return ParseError(lineno, col, msg); };
        auto cur_col = [&]() { return p < toks.size() ? toks[p].col : (int)line.size() + 1; };

        if (toks[0].text == "symbols") {
            if (have_symbols) throw fail(toks[0].col, "duplicate symbols line");
            for (p = 1; p < toks.size(); ++p) {
                if (!is_name(toks[p].text)) throw fail(toks[p].col, "bad symbol name");
                names.push_back(toks[p].text);
            }
            try {
                basis = SymbolBasis(names);
            } catch (const std::invalid_argument &e) {
                throw fail(toks[0].col, e.what());
            }
            have_symbols = true;
            continue;
        }
        if (toks[0].text != "phi") throw fail(toks[0].col, "expected 'symbols' or 'phi'");
        p = 1;
        if (p >= toks.size()) throw fail(cur_col(), "expected coordinate index");
        int j = 0;
        try {
            j = std::stoi(toks[p].text);
        } catch (...) {
            throw fail(toks[p].col, "bad coordinate index");
        }
        if (j < 1) throw fail(toks[p].col, "coordinate index must be >= 1");
        ++p;
        if (p >= toks.size() || toks[p].text != "=") throw fail(cur_col(), "expected '='");
        ++p;

        SymbolicScalar scalar;
        bool first = true;
        while (p < toks.size()) {
            int sign = 1;
            if (toks[p].text == "+" || toks[p].text == "-") {
                sign = toks[p].text == "-" ? -1 : 1;
                ++p;
            } else if (!first) {
                throw fail(toks[p].col, "expected '+' or '-'");
            }
            if (p >= toks.size()) throw fail(cur_col(), "dangling sign");
            first = false;

            Rat value;
            bool have_value = false;
            if (auto r = parse_rational(toks[p].text)) {
                value = *r;
                have_value = true;
                ++p;
            } else if (toks[p].text.find('/') != std::string::npos ||
                       isdigit((unsigned char)toks[p].text[0])) {
                throw fail(toks[p].col, "bad rational literal");
            }
            // '/' split across tokens cannot happen: '/' is not punctuation
            if (have_value && p < toks.size() && toks[p].text == "*") {
                ++p;
                if (p >= toks.size() || !is_name(toks[p].text))
                    throw fail(cur_col(), "expected symbol after '*'");
                int idx = basis.index_of(toks[p].text);
                if (idx < 0) throw fail(toks[p].col, "undeclared symbol '" + toks[p].text + "'");
                scalar.add_term(idx, Rat(sign) * value);
                ++p;
            } else if (have_value) {
                scalar.rational += Rat(sign) * value;
            } else if (is_name(toks[p].text)) {
                int idx = basis.index_of(toks[p].text);
                if (idx < 0) throw fail(toks[p].col, "undeclared symbol '" + toks[p].text + "'");
                scalar.add_term(idx, Rat(sign));
                ++p;
            } else {
                throw fail(toks[p].col, "expected term");
            }
        }
        if (first) throw fail(cur_col(), "empty phase expression");
        if (entries.count(j)) throw fail(toks[0].col, "duplicate coordinate " + std::to_string(j));
        entries[j] = scalar;
    }

    if (entries.empty()) throw ParseError(lineno ? lineno : 1, 1, "no phi lines");
    int n = entries.rbegin()->first;
    std::vector<SymbolicScalar> list(n);
    for (int j = 1; j <= n; ++j) {
        auto it = entries.find(j);
        if (it == entries.end())
            throw ParseError(lineno, 1, "missing coordinate " + std::to_string(j) + " (expected contiguous 1..n)");
        list[j - 1] = it->second;
    }
    return PhaseVector(basis, std::move(list));
}

std::string print_phase_file(const PhaseVector &phi) {
    std::ostringstream out;
    if (!phi.basis.names.empty()) {
        out << "symbols";
        for (auto &n : phi.basis.names) out << " " << n;
        out << "\n";
    }
    for (int j = 0; j < phi.dim(); ++j) {
        const SymbolicScalar &s = phi.entries[j];
        out << "phi " << (j + 1) << " =";
        bool first = true;
        auto emit = [&](const Rat &c, int idx) {
            Rat a = c;
            if (first) {
                out << " ";
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            out << rat_to_string(a);
            if (idx >= 0) out << "*" << phi.basis.names[idx];
            first = false;
        };
        if (s.rational != 0 || s.coeffs.empty()) emit(s.rational, -1);
        for (auto &[idx, c] : s.coeffs) emit(c, idx);
        out << "\n";
    }
    return out.str();
}

// ---- germ files ----

bool ParsedGerm::exact_mode() const {
    for (auto &l : lambda)
        if (l.is_phase) return false;
    for (auto &t : terms)
        if (!t.re.is_rational || !t.im.is_rational) return false;
    return true;
}

namespace {

NumberLit parse_number(const Tok &tok, int lineno, int sign) {
    NumberLit lit;
    if (auto r = parse_rational(tok.text)) {
        lit.is_rational = true;
        lit.rational = Rat(sign) * *r;
        return lit;
    }
    if (is_unsigned_number(tok.text) && tok.text.find('/') == std::string::npos) {
        lit.is_rational = false;
        lit.decimal = (sign < 0 ? "-" : "") + tok.text;
        return lit;
    }
    throw ParseError(lineno, tok.col, "bad numeric literal '" + tok.text + "'");
}

// <re> (+|-) <im> I
std::pair<NumberLit, NumberLit> parse_complex(const std::vector<Tok> &toks, size_t &p, int lineno) {
    auto need = [&](const char *what) {
        if (p >= toks.size()) throw ParseError(lineno, toks.empty() ? 1 : toks.back().col + 1, what);
    };
    int sign = 1;
    if (p < toks.size() && (toks[p].text == "-" || toks[p].text == "+")) {
        sign = toks[p].text == "-" ? -1 : 1;
        ++p;
    }
    need("expected real part");
    NumberLit re = parse_number(toks[p], lineno, sign);
    ++p;
    need("expected '+' or '-' before imaginary part");
    if (toks[p].text != "+" && toks[p].text != "-")
        throw ParseError(lineno, toks[p].col, "expected '+' or '-' before imaginary part");
    sign = toks[p].text == "-" ? -1 : 1;
    ++p;
    need("expected imaginary part");
    NumberLit im = parse_number(toks[p], lineno, sign);
    ++p;
    need("expected 'I'");
    if (toks[p].text != "I") throw ParseError(lineno, toks[p].col, "expected 'I'");
    ++p;
    return {re, im};
}

} // namespace

ParsedGerm parse_germ_file(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    ParsedGerm g;
    std::map<int, GermLambda> lambdas;
    std::map<int, int> epss;
    bool have_dim = false, have_deg = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        size_t p = 0;
        auto fail = [&](int col, const std::string &msg) -> ParseError { return ParseError(lineno, col, msg); };
        auto expect_int = [&](const char *what) {
            if (p >= toks.size()) throw fail((int)line.size() + 1, std::string("expected ") + what);
            try {
                int v = std::stoi(toks[p].text);
                ++p;
                return v;
            } catch (...) {
                throw fail(toks[p].col, std::string("bad ") + what);
            }
        };

        const std::string &kw = toks[p].text;
        ++p;
        if (kw == "dim") {
            g.n = expect_int("dimension");
            if (g.n < 1) throw fail(toks[0].col, "dim must be >= 1");
            have_dim = true;
        } else if (kw == "maxdeg") {
            g.D = expect_int("maxdeg");
            if (g.D < 1) throw fail(toks[0].col, "maxdeg must be >= 1");
            have_deg = true;
        } else if (kw == "lambda") {
            int j = expect_int("coordinate");
            if (p >= toks.size() || toks[p].text != "=") throw fail((int)line.size() + 1, "expected '='");
            ++p;
            if (p >= toks.size()) throw fail((int)line.size() + 1, "expected 'exact' or 'phase'");
            GermLambda l;
            if (toks[p].text == "exact") {
                ++p;
                auto [re, im] = parse_complex(toks, p, lineno);
                if (!re.is_rational || !im.is_rational)
                    throw fail(toks[0].col, "exact eigenvalue requires rational components");
                l.exact = {re.rational, im.rational};
            } else if (toks[p].text == "phase") {
                ++p;
                l.is_phase = true;
                l.phase_index = expect_int("phase coordinate");
            } else {
                throw fail(toks[p].col, "expected 'exact' or 'phase'");
            }
            if (lambdas.count(j)) throw fail(toks[0].col, "duplicate lambda line");
            lambdas[j] = l;
        } else if (kw == "eps") {
            int j = expect_int("coordinate");
            if (p >= toks.size() || toks[p].text != "=") throw fail((int)line.size() + 1, "expected '='");
            ++p;
            int v = expect_int("eps value");
            if (v != 0 && v != 1) throw fail(toks[0].col, "eps must be 0 or 1");
            if (j < 2) throw fail(toks[0].col, "eps index must be >= 2");
            epss[j] = v;
        } else if (kw == "term") {
            GermTerm t;
            t.coordinate = expect_int("coordinate");
            if (p >= toks.size() || toks[p].text != "(") throw fail((int)line.size() + 1, "expected '('");
            ++p;
            while (true) {
                if (p >= toks.size()) throw fail((int)line.size() + 1, "unterminated multi-index");
                if (toks[p].text == ")") {
                    ++p;
                    break;
                }
                if (toks[p].text == ",") {
                    ++p;
                    continue;
                }
                int v = expect_int("exponent");
                if (v < 0) throw fail(toks[p].col, "negative exponent");
                t.monomial.push_back(v);
            }
            auto [re, im] = parse_complex(toks, p, lineno);
            t.re = re;
            t.im = im;
            g.terms.push_back(std::move(t));
        } else {
            throw fail(toks[0].col, "unknown directive '" + kw + "'");
        }
        if (p < toks.size()) throw fail(toks[p].col, "trailing tokens");
    }

    if (!have_dim) throw ParseError(lineno ? lineno : 1, 1, "missing dim line");
    if (!have_deg) throw ParseError(lineno ? lineno : 1, 1, "missing maxdeg line");
    g.lambda.resize(g.n);
    for (int j = 1; j <= g.n; ++j) {
        auto it = lambdas.find(j);
        if (it == lambdas.end()) throw ParseError(lineno, 1, "missing lambda " + std::to_string(j));
        g.lambda[j - 1] = it->second;
    }
    g.eps.assign(g.n, 0);
    for (auto &[j, v] : epss) {
        if (j > g.n) throw ParseError(lineno, 1, "eps index out of range");
        g.eps[j - 1] = v;
    }
    for (auto &t : g.terms) {
        if (t.coordinate < 1 || t.coordinate > g.n) throw ParseError(lineno, 1, "term coordinate out of range");
        if ((int)t.monomial.size() != g.n) throw ParseError(lineno, 1, "term multi-index has wrong length");
        int deg = mi_degree(t.monomial);
        if (deg < 2 || deg > g.D) throw ParseError(lineno, 1, "term degree outside [2, maxdeg]");
    }
    return g;
}

namespace {

std::string lit_str(const NumberLit &l) { return l.is_rational ? rat_to_string(l.rational) : l.decimal; }

} // namespace

std::string print_germ_file(const ParsedGerm &g) {
    std::ostringstream out;
    out << "dim " << g.n << "\nmaxdeg " << g.D << "\n";
    for (int j = 0; j < g.n; ++j) {
        out << "lambda " << (j + 1) << " = ";
        if (g.lambda[j].is_phase)
            out << "phase " << g.lambda[j].phase_index;
        else
            out << "exact " << rat_to_string(g.lambda[j].exact.re) << " + "
                << rat_to_string(g.lambda[j].exact.im) << " I";
        out << "\n";
    }
    for (int j = 1; j < g.n; ++j) out << "eps " << (j + 1) << " = " << g.eps[j] << "\n";
    std::vector<GermTerm> terms = g.terms;
    std::sort(terms.begin(), terms.end(), [](const GermTerm &a, const GermTerm &b) {
        if (a.coordinate != b.coordinate) return a.coordinate < b.coordinate;
        return MiGradedLess{}(a.monomial, b.monomial);
    });
    for (auto &t : terms) {
        out << "term " << t.coordinate << " (";
        for (size_t i = 0; i < t.monomial.size(); ++i) out << (i ? "," : "") << t.monomial[i];
        out << ") " << lit_str(t.re) << " + " << lit_str(t.im) << " I\n";
    }
    return out.str();
}

namespace {

void check_eps_constraints(const ParsedGerm &g, const std::optional<PhaseVector> &phases) {
    for (int j = 1; j < g.n; ++j) {
        if (!g.eps[j]) continue;
        const GermLambda &a = g.lambda[j - 1], &b = g.lambda[j];
        if (a.is_phase != b.is_phase)
            throw std::invalid_argument("eps " + std::to_string(j + 1) + ": mixed eigenvalue modes");
        if (a.is_phase) {
            if (!phases) throw std::invalid_argument("phase-linked eigenvalues need a phase file");
            const SymbolicScalar &pa = phases->entries[a.phase_index - 1];
            const SymbolicScalar &pb = phases->entries[b.phase_index - 1];
            if (!(pa == pb))
                throw std::invalid_argument("eps " + std::to_string(j + 1) + ": unequal eigenvalues");
        } else if (!(a.exact == b.exact)) {
            throw std::invalid_argument("eps " + std::to_string(j + 1) + ": unequal eigenvalues");
        }
    }
}

void check_phase_indices(const ParsedGerm &g, const std::optional<PhaseVector> &phases) {
    for (auto &l : g.lambda) {
        if (!l.is_phase) continue;
        if (!phases) throw std::invalid_argument("phase-linked eigenvalues need a phase file");
        if (l.phase_index < 1 || l.phase_index > phases->dim())
            throw std::invalid_argument("phase index out of range");
    }
}

} // namespace

JetMap<GaussianRational> build_exact_jet(const ParsedGerm &g) {
    if (!g.exact_mode()) throw std::invalid_argument("germ file is not in exact mode");
    check_eps_constraints(g, std::nullopt);
    for (auto &l : g.lambda)
        if (!l.is_phase && l.exact.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
    JetMap<GaussianRational> f;
    f.n = g.n;
    f.D = g.D;
    f.lambda.resize(g.n);
    for (int j = 0; j < g.n; ++j) f.lambda[j] = g.lambda[j].exact;
    f.eps = g.eps;
    f.higher.assign(g.n, {});
    for (auto &t : g.terms)
        poly_add_term(f.higher[t.coordinate - 1], t.monomial, GaussianRational{t.re.rational, t.im.rational});
    return f;
}

JetMap<BigComplex> build_numeric_jet(const ParsedGerm &g, const std::optional<PhaseVector> &phases,
                                     long prec) {
    check_phase_indices(g, phases);
    check_eps_constraints(g, phases);
    for (auto &l : g.lambda)
        if (!l.is_phase && l.exact.is_zero()) throw std::invalid_argument("eigenvalue must be nonzero");
    JetMap<BigComplex> f;
    f.n = g.n;
    f.D = g.D;
    f.prec = prec;
    f.lambda.assign(g.n, BigComplex(prec));
    f.eps = g.eps;
    f.higher.assign(g.n, {});
    bool any_phase = false;
    PhaseLink link;
    link.coord.assign(g.n, 0);
    for (int j = 0; j < g.n; ++j) {
        if (g.lambda[j].is_phase) {
            any_phase = true;
            link.coord[j] = g.lambda[j].phase_index;
            // numeric value filled by the caller (pd options) when needed
            f.lambda[j] = BigComplex::from_long(1, prec);
        } else {
            f.lambda[j] = BigComplex::from_gaussian(g.lambda[j].exact, prec);
        }
    }
    if (any_phase) {
        link.phi = *phases;
        f.link = link;
    }
    auto to_big = [&](const NumberLit &l) {
        return l.is_rational ? BigFloat::from_rat(l.rational, prec) : BigFloat::from_string(l.decimal, prec);
    };
    for (auto &t : g.terms)
        poly_add_term(f.higher[t.coordinate - 1], t.monomial, BigComplex{to_big(t.re), to_big(t.im)});
    return f;
}

JetField<GaussianRational> build_exact_field(const ParsedGerm &g) {
    if (!g.exact_mode()) throw std::invalid_argument("field file is not in exact mode");
    JetField<GaussianRational> x = JetField<GaussianRational>::zero(g.n, g.D);
    for (int j = 0; j < g.n; ++j) x.dia[j] = g.lambda[j].exact;
    for (int j = 1; j < g.n; ++j)
        if (g.eps[j]) x.nil[j][j - 1] = GaussianRational(1);
    for (auto &t : g.terms)
        poly_add_term(x.higher[t.coordinate - 1], t.monomial, GaussianRational{t.re.rational, t.im.rational});
    return x;
}

JetField<BigComplex> build_numeric_field(const ParsedGerm &g, const std::optional<PhaseVector> &phases,
                                         long prec) {
    check_phase_indices(g, phases);
    JetField<BigComplex> x = JetField<BigComplex>::zero(g.n, g.D, prec);
    for (int j = 0; j < g.n; ++j) {
        if (g.lambda[j].is_phase) {
            // the diagonal entry is the phase itself (additive setting); numeric
            // evaluation requires symbol values, handled by the report layer
            throw std::invalid_argument("numeric field build does not take phase-linked diagonals");
        }
        x.dia[j] = BigComplex::from_gaussian(g.lambda[j].exact, prec);
    }
    for (int j = 1; j < g.n; ++j)
        if (g.eps[j]) x.nil[j][j - 1] = BigComplex::from_long(1, prec);
    auto to_big = [&](const NumberLit &l) {
        return l.is_rational ? BigFloat::from_rat(l.rational, prec) : BigFloat::from_string(l.decimal, prec);
    };
    for (auto &t : g.terms)
        poly_add_term(x.higher[t.coordinate - 1], t.monomial, BigComplex{to_big(t.re), to_big(t.im)});
    return x;
}

BigComplex resolve_symbol_value(const std::string &name, const std::string &assigned, long prec) {
    std::string src = assigned.empty() ? name : assigned;
    if (src == "i" || src == "I") return BigComplex{BigFloat(prec), BigFloat::from_long(1, prec)};
    if (src == "pi") return BigComplex{BigFloat::pi(prec), BigFloat(prec)};
    if (src == "e") return BigComplex{BigFloat::euler_e(prec), BigFloat(prec)};
    if (src.rfind("sqrt", 0) == 0) {
        std::string arg = src.substr(4);
        if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return isdigit((unsigned char)c); }))
            return BigComplex{BigFloat::sqrt_of(std::stoul(arg), prec), BigFloat(prec)};
    }
    if (auto r = parse_rational(src)) return BigComplex{BigFloat::from_rat(*r, prec), BigFloat(prec)};
    try {
        return BigComplex{BigFloat::from_string(src, prec), BigFloat(prec)};
    } catch (...) {
        throw std::invalid_argument("no numeric value for symbol '" + name + "'");
    }
}

} // namespace torictool
