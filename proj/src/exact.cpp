#include "torictool/symbols.hpp"

namespace torictool {

std::optional<Rat> parse_rational(const std::string &s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || !isdigit((unsigned char)s[i])) return std::nullopt;
    size_t slash = s.find('/', i);
    auto digits = [&](size_t from, size_t to) -> std::optional<Int> {
        if (from >= to) return std::nullopt;
        for (size_t k = from; k < to; ++k)
            if (!isdigit((unsigned char)s[k])) return std::nullopt;
        return Int(s.substr(from, to - from));
    };
    Int p, q = 1;
    if (slash == std::string::npos) {
        auto d = digits(i, s.size());
        if (!d) return std::nullopt;
        p = *d;
    } else {
        auto dn = digits(i, slash);
        auto dd = digits(slash + 1, s.size());
        if (!dn || !dd || *dd == 0) return std::nullopt;
        p = *dn;
        q = *dd;
    }
    Rat r(p, q);
    return neg ? -r : r;
}

SymbolicScalar phase_from_terms(const SymbolBasis &basis, const std::vector<std::pair<Rat, int>> &terms) {
    SymbolicScalar s;
    for (auto &[c, idx] : terms) {
        if (idx < 0) {
            s.rational += c;
        } else {
            if (idx >= (int)basis.size()) throw std::invalid_argument("unknown symbol index");
            s.add_term(idx, c);
        }
    }
    return s.reduced_mod1();
}

bool is_integral_combination(const PhaseVector &phi, const std::vector<Int> &Q, int j) {
    if ((int)Q.size() != phi.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    if (j < 1 || j > phi.dim()) throw std::invalid_argument("coordinate out of range");
    SymbolicScalar acc;
    for (int h = 0; h < phi.dim(); ++h)
        if (Q[h] != 0) acc = acc + phi.entries[h] * Rat(Q[h]);
    acc = acc - phi.entries[j - 1];
    return acc.coeffs.empty() && is_integer(acc.rational);
}

} // namespace torictool
