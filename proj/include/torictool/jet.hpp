#pragma once

#include "torictool/bigfloat.hpp"
#include "torictool/symbols.hpp"
#include "torictool/intlinalg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace torictool {

using MultiIndex = std::vector<int>;

inline int mi_degree(const MultiIndex &q) {
    int s = 0;
    for (int v : q) s += v;
    return s;
}

struct MiGradedLess {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const {
        int da = mi_degree(a), db = mi_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

template <class S> using Poly = std::map<MultiIndex, S, MiGradedLess>;

template <class S> struct ScalarTraits;

template <> struct ScalarTraits<GaussianRational> {
    static GaussianRational zero(long) { return GaussianRational(0); }
    static GaussianRational one(long) { return GaussianRational(1); }
    static GaussianRational from_int(long v, long) { return GaussianRational{Rat(v), Rat(0)}; }
    static GaussianRational from_rat(const Rat &q, long) { return GaussianRational{q, Rat(0)}; }
    static bool is_zero(const GaussianRational &s) { return s.is_zero(); }
    static constexpr bool exact = true;
};

template <> struct ScalarTraits<BigComplex> {
    static BigComplex zero(long prec) { return BigComplex(prec); }
    static BigComplex one(long prec) { return BigComplex::from_long(1, prec); }
    static BigComplex from_int(long v, long prec) { return BigComplex::from_long(v, prec); }
    static BigComplex from_rat(const Rat &q, long prec) {
        return BigComplex{BigFloat::from_rat(q, prec), BigFloat(prec)};
    }
    static bool is_zero(const BigComplex &s) { return s.is_zero(); }
    static constexpr bool exact = false;
};

// ---- truncated polynomial arithmetic ----

template <class S> void poly_add_term(Poly<S> &p, const MultiIndex &q, const S &c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    auto it = p.find(q);
    if (it == p.end()) {
        p.emplace(q, c);
    } else {
        it->second = it->second + c;
        if (ScalarTraits<S>::is_zero(it->second)) p.erase(it);
    }
}

template <class S> Poly<S> poly_add(const Poly<S> &a, const Poly<S> &b) {
    Poly<S> r = a;
    for (auto &[q, c] : b) poly_add_term(r, q, c);
    return r;
}

template <class S> Poly<S> poly_sub(const Poly<S> &a, const Poly<S> &b) {
    Poly<S> r = a;
    for (auto &[q, c] : b) poly_add_term(r, q, S{} - c);
    return r;
}

template <class S> Poly<S> poly_scale(const Poly<S> &a, const S &s) {
    Poly<S> r;
    for (auto &[q, c] : a) poly_add_term(r, q, c * s);
    return r;
}

template <class S> Poly<S> poly_mul(const Poly<S> &a, const Poly<S> &b, int cap) {
    Poly<S> r;
    for (auto &[qa, ca] : a) {
        int da = mi_degree(qa);
        for (auto &[qb, cb] : b) {
            if (da + mi_degree(qb) > cap) break; // graded order: later terms only larger
            MultiIndex q(qa.size());
            for (size_t i = 0; i < q.size(); ++i) q[i] = qa[i] + qb[i];
            poly_add_term(r, q, ca * cb);
        }
    }
    return r;
}

template <class S> Poly<S> poly_pow(const Poly<S> &a, int e, int n, int cap, long prec) {
    Poly<S> r;
    r.emplace(MultiIndex(n, 0), ScalarTraits<S>::one(prec));
    for (int i = 0; i < e; ++i) r = poly_mul(r, a, cap);
    return r;
}

// substitute comps into p (p in n variables, comps.size() == n), truncate at cap
template <class S>
Poly<S> poly_subst(const Poly<S> &p, const std::vector<Poly<S>> &comps, int n, int cap, long prec) {
    Poly<S> r;
    for (auto &[q, c] : p) {
        Poly<S> term;
        term.emplace(MultiIndex(n, 0), c);
        bool dead = false;
        for (int h = 0; h < n && !dead; ++h) {
            if (q[h] == 0) continue;
            Poly<S> pw = poly_pow(comps[h], q[h], n, cap, prec);
            if (pw.empty()) dead = true;
            term = poly_mul(term, pw, cap);
            if (term.empty()) dead = true;
        }
        if (!dead) r = poly_add(r, term);
    }
    return r;
}

template <class S> Poly<S> poly_partial(const Poly<S> &p, int h, long prec) {
    Poly<S> r;
    for (auto &[q, c] : p) {
        if (q[h] == 0) continue;
        MultiIndex d = q;
        d[h] -= 1;
        poly_add_term(r, d, c * ScalarTraits<S>::from_int(q[h], prec));
    }
    return r;
}

// ---- jets of maps and vector fields ----

// Linked phases for eigenvalues of the form e^{2 pi i phi_k}.
struct PhaseLink {
    PhaseVector phi;
    std::vector<int> coord; // per jet coordinate: index into phi (1-based), 0 = exact
};

template <class S> struct JetMap {
    int n = 0;
    int D = 1;
    long prec = 256;
    std::vector<S> lambda;      // eigenvalues
    std::vector<int> eps;       // eps[j] (0-based), eps[0] == 0
    std::vector<Poly<S>> higher; // per coordinate, terms with 2 <= |Q| <= D
    std::optional<PhaseLink> link;

    static JetMap identity(int n, int D, long prec = 256) {
        JetMap f;
        f.n = n;
        f.D = D;
        f.prec = prec;
        f.lambda.assign(n, ScalarTraits<S>::one(prec));
        f.eps.assign(n, 0);
        f.higher.assign(n, {});
        return f;
    }

    Poly<S> full_component(int j) const { // includes the linear part
        Poly<S> p = higher[j];
        MultiIndex ej(n, 0);
        ej[j] = 1;
        poly_add_term(p, ej, lambda[j]);
        if (eps[j]) {
            MultiIndex em(n, 0);
            em[j - 1] = 1;
            poly_add_term(p, em, ScalarTraits<S>::one(prec));
        }
        return p;
    }
};

template <class S> struct JetField {
    int n = 0;
    int D = 1;
    long prec = 256;
    std::vector<S> dia;                  // X^dia diagonal coefficients
    std::vector<std::vector<S>> nil;     // remaining linear part, n x n
    std::vector<Poly<S>> higher;         // order >= 2 terms per coordinate
    bool normal_form_flag = false;

    static JetField zero(int n, int D, long prec = 256) {
        JetField x;
        x.n = n;
        x.D = D;
        x.prec = prec;
        x.dia.assign(n, ScalarTraits<S>::zero(prec));
        x.nil.assign(n, std::vector<S>(n, ScalarTraits<S>::zero(prec)));
        x.higher.assign(n, {});
        return x;
    }

    Poly<S> full_component(int j) const {
        Poly<S> p = higher[j];
        for (int h = 0; h < n; ++h) {
            MultiIndex eh(n, 0);
            eh[h] = 1;
            S c = nil[j][h];
            if (h == j) c = c + dia[j];
            poly_add_term(p, eh, c);
        }
        return p;
    }
};

template <class S> JetMap<S> compose(const JetMap<S> &f, const JetMap<S> &g);

template <class S> JetField<S> lie_bracket(const JetField<S> &x, const JetField<S> &y);

struct PDOptions {
    long prec = 256;
    std::map<std::string, BigComplex> symbol_values; // numeric values for division
    // exact eigenvalues for jets with numeric coefficients but no phase links;
    // resonance is then decided by exact Gaussian-rational power comparison
    std::vector<GaussianRational> exact_lambda;
};

template <class S> struct PDResult {
    JetMap<S> psi;
    JetMap<S> g;
};

PDResult<GaussianRational> pd_normalize(const JetMap<GaussianRational> &f);
PDResult<BigComplex> pd_normalize(const JetMap<BigComplex> &f, const PDOptions &opts);

struct CommutationWitness {
    bool commutes = true;
    std::vector<std::pair<MultiIndex, int>> offending; // (Q, j) 1-based j, |Q| = 1 entries included
};

template <class S> CommutationWitness commutation_check(const JetMap<S> &f, const IntMat &theta);

// numeric side of Theorem-style commutation: max |f_{Q,j}| |chi(<Q,.>) - chi(theta_j)|
// over the support at a sample torus point
BigFloat commutation_spot_check(const JetMap<BigComplex> &f, const IntMat &theta,
                                const std::vector<Rat> &x);

template <class S> JetMap<S> flow(const JetField<S> &x, const S &t);

struct FieldCheckResult {
    bool ok = true;
    std::string reason;
    std::optional<std::pair<MultiIndex, int>> witness;
};

FieldCheckResult flow_normal_form_check(const JetField<BigComplex> &x);

template <class S> struct FieldCommuteResult {
    bool commutes = true;
    std::optional<std::pair<MultiIndex, int>> witness;
};
FieldCommuteResult<GaussianRational> commutes_with_field(const JetMap<GaussianRational> &f,
                                                         const JetField<GaussianRational> &x);
FieldCommuteResult<BigComplex> commutes_with_field(const JetMap<BigComplex> &f,
                                                   const JetField<BigComplex> &x, long tol_bits);

struct VfToricResult {
    int r = 0;
    std::vector<IntVec> vectors;
    std::vector<SymbolicScalar> coeffs;
};
// additive toric data of an exact diagonal linear part (no mod-Z ambiguity)
VfToricResult vf_toric_degree(const std::vector<SymbolicScalar> &dia, const SymbolBasis &basis);

// thrown when a homological divisor falls under the precision floor
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- implementation of the small templates ----

template <class S> JetMap<S> compose(const JetMap<S> &f, const JetMap<S> &g) {
    if (f.n != g.n || f.D != g.D) throw std::invalid_argument("compose: jet shape mismatch");
    const int n = f.n, D = f.D;
    std::vector<Poly<S>> gc(n);
    for (int j = 0; j < n; ++j) gc[j] = g.full_component(j);
    JetMap<S> r;
    r.n = n;
    r.D = D;
    r.prec = f.prec;
    r.lambda.assign(n, ScalarTraits<S>::zero(f.prec));
    r.eps.assign(n, 0);
    r.higher.assign(n, {});
    r.link = f.link ? f.link : g.link;
    for (int j = 0; j < n; ++j) {
        Poly<S> comp = poly_subst(f.full_component(j), gc, n, D, f.prec);
        // keep the diagonal coefficient in lambda; any other linear term stays in
        // `higher`, so composed jets are not necessarily in the lambda/eps shape
        Poly<S> high;
        for (auto &[q, c] : comp) {
            int d = mi_degree(q);
            if (d == 1) {
                int h = 0;
                while (q[h] == 0) ++h;
                if (h == j) {
                    r.lambda[j] = c;
                    continue;
                }
            }
            poly_add_term(high, q, c);
        }
        r.higher[j] = std::move(high);
    }
    return r;
}

// Note: compose() may produce linear cross terms (kept inside `higher`); the
// result is a jet of a map, not necessarily in the lambda/eps normal shape.

template <class S> JetField<S> lie_bracket(const JetField<S> &x, const JetField<S> &y) {
    if (x.n != y.n || x.D != y.D) throw std::invalid_argument("lie_bracket: shape mismatch");
    const int n = x.n, D = x.D;
    JetField<S> r = JetField<S>::zero(n, D, x.prec);
    std::vector<Poly<S>> xc(n), yc(n);
    for (int j = 0; j < n; ++j) {
        xc[j] = x.full_component(j);
        yc[j] = y.full_component(j);
    }
    for (int j = 0; j < n; ++j) {
        Poly<S> acc;
        for (int h = 0; h < n; ++h) {
            acc = poly_add(acc, poly_mul(xc[h], poly_partial(yc[j], h, x.prec), D));
            acc = poly_sub(acc, poly_mul(yc[h], poly_partial(xc[j], h, x.prec), D));
        }
        // split into linear and higher
        for (auto &[q, c] : acc) {
            if (mi_degree(q) == 1) {
                int h = 0;
                while (q[h] == 0) ++h;
                if (h == j)
                    r.dia[j] = r.dia[j] + c;
                else
                    r.nil[j][h] = r.nil[j][h] + c;
            } else {
                poly_add_term(r.higher[j], q, c);
            }
        }
    }
    return r;
}

} // namespace torictool
