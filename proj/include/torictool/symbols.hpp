#pragma once

#include "torictool/numbers.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace torictool {

// Ordered list of symbol names. The denoted complex values, together with 1, are
// assumed rationally independent; that assumption is the caller's contract and is
// never checked numerically here.
struct SymbolBasis {
    std::vector<std::string> names;

    SymbolBasis() = default;
    explicit SymbolBasis(std::vector<std::string> n) : names(std::move(n)) {
        for (size_t i = 0; i < names.size(); ++i)
            for (size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j]) throw std::invalid_argument("duplicate symbol: " + names[i]);
    }

    size_t size() const { return names.size(); }
    int index_of(const std::string &name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return (int)i;
        return -1;
    }
    bool operator==(const SymbolBasis &o) const = default;
};

// Element of Q + sum_s Q*x_s: a rational part plus finitely supported rational
// coefficients on the basis symbols. Also used for toric coefficients.
struct SymbolicScalar {
    Rat rational;
    std::map<int, Rat> coeffs; // symbol index -> nonzero coefficient

    SymbolicScalar() : rational(0) {}
    explicit SymbolicScalar(Rat r) : rational(std::move(r)) {}

    static SymbolicScalar symbol(int idx, Rat c = Rat(1)) {
        SymbolicScalar s;
        if (c != 0) s.coeffs[idx] = std::move(c);
        return s;
    }

    bool is_zero() const { return rational == 0 && coeffs.empty(); }
    bool is_rational() const { return coeffs.empty(); }

    void add_term(int idx, const Rat &c) {
        auto it = coeffs.find(idx);
        if (it == coeffs.end()) {
            if (c != 0) coeffs[idx] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    SymbolicScalar operator+(const SymbolicScalar &o) const {
        SymbolicScalar r = *this;
        r.rational += o.rational;
        for (auto &[i, c] : o.coeffs) r.add_term(i, c);
        return r;
    }
    SymbolicScalar operator-(const SymbolicScalar &o) const {
        SymbolicScalar r = *this;
        r.rational -= o.rational;
        for (auto &[i, c] : o.coeffs) r.add_term(i, -c);
        return r;
    }
    SymbolicScalar operator-() const {
        SymbolicScalar r;
        r.rational = -rational;
        for (auto &[i, c] : coeffs) r.coeffs[i] = -c;
        return r;
    }
    SymbolicScalar operator*(const Rat &q) const {
        SymbolicScalar r;
        if (q == 0) return r;
        r.rational = rational * q;
        for (auto &[i, c] : coeffs) r.coeffs[i] = c * q;
        return r;
    }
    bool operator==(const SymbolicScalar &o) const { return rational == o.rational && coeffs == o.coeffs; }

    Rat coeff(int idx) const {
        auto it = coeffs.find(idx);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    // drop the rational part, keep the symbol combination
    SymbolicScalar symbol_part() const {
        SymbolicScalar r = *this;
        r.rational = 0;
        return r;
    }

    // canonical class representative: rational part reduced into [0,1)
    SymbolicScalar reduced_mod1() const {
        SymbolicScalar r = *this;
        r.rational = mod1(r.rational);
        return r;
    }
};

// [phi] in (C/Z)^n, entries stored with rational part canonicalized into [0,1).
struct PhaseVector {
    SymbolBasis basis;
    std::vector<SymbolicScalar> entries;

    PhaseVector() = default;
    PhaseVector(SymbolBasis b, std::vector<SymbolicScalar> e) : basis(std::move(b)), entries(std::move(e)) {
        for (auto &s : entries) s = s.reduced_mod1();
    }

    int dim() const { return (int)entries.size(); }
    bool is_zero() const {
        for (auto &e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
};

// Sums like-symbol terms and reduces the rational part mod 1.
// terms: (coefficient, symbol index or -1 for the pure rational term)
SymbolicScalar phase_from_terms(const SymbolBasis &basis, const std::vector<std::pair<Rat, int>> &terms);

// Exact test of <Q,phi> - phi_j in Z: every symbol coefficient of the combination
// vanishes and the rational part is an integer. This is the resonance oracle
// everything downstream is checked against.
bool is_integral_combination(const PhaseVector &phi, const std::vector<Int> &Q, int j);

} // namespace torictool
