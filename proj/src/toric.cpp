#include "torictool/toric.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace torictool {

std::string torsion_kind_name(TorsionKind k) {
    switch (k) {
    case TorsionKind::TorsionFree: return "torsion_free";
    case TorsionKind::ImpureTorsion: return "impure_torsion";
    case TorsionKind::PureTorsionSimplifiable: return "pure_torsion_simplifiable";
    case TorsionKind::PureTorsionNotSimplified: return "pure_torsion_not_simplified";
    }
    return "?";
}

PhaseVector evaluate_tuple(const ToricTuple &t) {
    std::vector<SymbolicScalar> entries(t.n);
    for (int j = 0; j < t.n; ++j) {
        SymbolicScalar acc;
        for (int k = 0; k < t.r; ++k) acc = acc + t.coeffs[k] * Rat(t.vectors[k][j]);
        entries[j] = acc;
    }
    return PhaseVector(t.basis, std::move(entries));
}

// rational independence of the coefficient list, optionally together with 1
static bool coeffs_rationally_independent(const std::vector<SymbolicScalar> &cs, const SymbolBasis &basis,
                                          bool with_one) {
    size_t sigma = basis.size();
    std::vector<RatVec> rows;
    for (auto &c : cs) {
        RatVec row(sigma + 1, Rat(0));
        row[0] = c.rational;
        for (auto &[i, v] : c.coeffs) row[1 + i] = v;
        rows.push_back(std::move(row));
    }
    if (with_one) {
        RatVec one(sigma + 1, Rat(0));
        one[0] = 1;
        rows.push_back(std::move(one));
    }
    return rat_rank(rows) == (int)rows.size();
}

static int vectors_rank(const std::vector<IntVec> &vs) {
    std::vector<RatVec> rows;
    for (auto &v : vs) {
        RatVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
        rows.push_back(std::move(r));
    }
    return rat_rank(rows);
}

void validate_tuple(const ToricTuple &t, const PhaseVector &phi) {
    if ((int)t.vectors.size() != t.r || (int)t.coeffs.size() != t.r)
        throw std::invalid_argument("tuple: inconsistent sizes");
    PhaseVector rec = evaluate_tuple(t);
    if (rec.dim() != phi.dim()) throw std::invalid_argument("tuple: dimension mismatch");
    for (int j = 0; j < phi.dim(); ++j)
        if (!(rec.entries[j] == phi.entries[j])) throw std::invalid_argument("tuple: recombination failed");
    if (t.r == 0) return;
    if (vectors_rank(t.vectors) != t.r) throw std::invalid_argument("tuple: vectors rationally dependent");
    if (!coeffs_rationally_independent(t.coeffs, t.basis, false))
        throw std::invalid_argument("tuple: coefficients rationally dependent");
    if (t.reduced) {
        if (!t.m || *t.m < 2) throw std::invalid_argument("reduced tuple: missing m");
        if (!(t.coeffs[0] == SymbolicScalar(Rat(1, *t.m))))
            throw std::invalid_argument("reduced tuple: first coefficient is not 1/m");
        Int g = *t.m;
        for (auto &x : t.vectors[0]) g = gcd(g, x);
        if (g != 1) throw std::invalid_argument("reduced tuple: gcd(m, eta1) != 1");
        std::vector<SymbolicScalar> rest(t.coeffs.begin() + 1, t.coeffs.end());
        for (auto &c : rest)
            if (c.rational != 0) throw std::invalid_argument("reduced tuple: trailing rational part");
        if (!coeffs_rationally_independent(rest, t.basis, true))
            throw std::invalid_argument("reduced tuple: trailing coefficients dependent with 1");
    }
}

// symbol coefficient vectors of phi, for the symbols actually used
static std::vector<std::pair<int, RatVec>> symbol_vectors(const PhaseVector &phi) {
    std::vector<std::pair<int, RatVec>> out;
    for (int s = 0; s < (int)phi.basis.size(); ++s) {
        RatVec v(phi.dim(), Rat(0));
        bool nonzero = false;
        for (int j = 0; j < phi.dim(); ++j) {
            v[j] = phi.entries[j].coeff(s);
            if (v[j] != 0) nonzero = true;
        }
        if (nonzero) out.push_back({s, std::move(v)});
    }
    return out;
}

ToricAnalysis toric_analysis(const PhaseVector &phi) {
    const int n = phi.dim();
    if (n == 0) throw std::invalid_argument("toric_analysis: zero-dimensional input");

    auto syms = symbol_vectors(phi);
    std::vector<RatVec> spanning;
    for (auto &[s, v] : syms) spanning.push_back(v);
    std::vector<IntVec> sat = saturation_basis(n, spanning);
    const int t = (int)sat.size();

    // coordinates of each symbol vector over the saturated basis
    std::vector<RatVec> urows(n, RatVec(t));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < t; ++k) urows[i][k] = Rat(sat[k][i]);
    std::vector<SymbolicScalar> y(t);
    for (auto &[s, v] : syms) {
        auto sol = rat_solve(urows, v);
        if (!sol) throw std::logic_error("toric_analysis: symbol vector outside its own span");
        for (int k = 0; k < t; ++k)
            if ((*sol)[k] != 0) y[k].add_term(s, (*sol)[k]);
    }

    RatVec c(n);
    for (int j = 0; j < n; ++j) c[j] = phi.entries[j].rational;

    ToricAnalysis out;
    out.tuple.basis = phi.basis;
    out.tuple.n = n;

    auto absorbed = split_over_saturated(sat, c);
    if (absorbed) {
        // torsion-free: the rational part folds into the symbol directions
        out.degree = t;
        out.tuple.r = t;
        out.tuple.vectors = sat;
        out.tuple.coeffs = y;
        for (int k = 0; k < t; ++k) out.tuple.coeffs[k].rational = (*absorbed)[k];
        return out;
    }

    // torsion case: canonical reduced tuple (1/m) eta1 + sum y_k u_k
    Int m0 = 1;
    for (auto &q : c) m0 = lcm(m0, den(q));
    IntVec g(n);
    for (int j = 0; j < n; ++j) g[j] = num(c[j] * Rat(m0));
    Int d = m0;
    for (auto &x : g) d = gcd(d, x);
    Int m = m0 / d;
    IntVec eta1(n);
    for (int j = 0; j < n; ++j) eta1[j] = g[j] / d;
    if (m < 2) throw std::logic_error("toric_analysis: torsion branch with integral rational part");

    out.degree = t + 1;
    out.tuple.r = t + 1;
    out.tuple.vectors.push_back(std::move(eta1));
    for (auto &u : sat) out.tuple.vectors.push_back(u);
    out.tuple.coeffs.push_back(SymbolicScalar(Rat(1, m)));
    for (auto &yk : y) out.tuple.coeffs.push_back(yk);
    out.tuple.reduced = true;
    out.tuple.m = m;
    return out;
}

TorsionReport torsion_of_reduced(const ToricTuple &t) {
    if (!t.reduced || !t.m) throw std::invalid_argument("torsion_of_reduced: tuple not reduced");
    TorsionReport rep;
    rep.m = *t.m;
    std::vector<IntVec> rows(t.vectors.begin() + 1, t.vectors.end());
    std::vector<IntVec> kern =
        rows.empty() ? integer_kernel(IntMat(0, t.n)) : integer_kernel(IntMat::from_rows(rows));
    Int q = 0;
    for (auto &b : kern) q = gcd(q, dot(b, t.vectors[0]));
    if (q == 0) throw std::logic_error("torsion: S = {0}, vectors dependent");
    rep.q = abs(q);
    rep.tau = rep.m / gcd(rep.m, rep.q);
    return rep;
}

TorsionReport torsion(const PhaseVector &phi) {
    ToricAnalysis a = toric_analysis(phi);
    if (!a.tuple.reduced) return TorsionReport{};
    return torsion_of_reduced(a.tuple);
}

ToricTuple reduce_tuple(const ToricTuple &t, bool equal_phase_compatible) {
    PhaseVector phi = evaluate_tuple(t);
    ToricAnalysis a = toric_analysis(phi);
    if (!a.tuple.reduced) throw std::invalid_argument("reduce_tuple: input already torsion-free");
    ToricTuple out = a.tuple;
    if (equal_phase_compatible) {
        Int m = *out.m;
        for (int j = 0; j < phi.dim(); ++j)
            for (int h = 0; h < j; ++h) {
                if (!(phi.entries[j] == phi.entries[h])) continue;
                Int diff = out.vectors[0][j] - out.vectors[0][h];
                if (diff % m != 0) throw std::logic_error("equal phases with incompatible eta1 mod m");
                out.vectors[0][j] = out.vectors[0][h];
                break;
            }
        validate_tuple(out, phi);
    }
    return out;
}

ToricTuple eliminate_rational_coefficient(const ToricTuple &t) {
    if (!t.reduced || !t.m) throw std::invalid_argument("eliminate: tuple not reduced");
    if (t.r < 1) throw std::invalid_argument("eliminate: empty tuple");
    const int n = t.n;
    PhaseVector phi = evaluate_tuple(t);

    // solve for fresh coefficients over the trailing vectors; works for paper-form
    // reduced tuples whose trailing coefficients still carry rational parts
    ToricTuple out;
    out.basis = t.basis;
    out.n = n;
    out.r = t.r - 1;
    out.vectors.assign(t.vectors.begin() + 1, t.vectors.end());
    out.coeffs.assign(out.r, SymbolicScalar{});

    std::vector<RatVec> rows(n, RatVec(out.r));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < out.r; ++k) rows[i][k] = Rat(out.vectors[k][i]);

    for (int s = 0; s < (int)phi.basis.size(); ++s) {
        RatVec v(n, Rat(0));
        bool nz = false;
        for (int j = 0; j < n; ++j) {
            v[j] = phi.entries[j].coeff(s);
            if (v[j] != 0) nz = true;
        }
        if (!nz) continue;
        auto sol = rat_solve(rows, v);
        if (!sol) throw std::invalid_argument("eliminate: symbol parts escape the trailing vectors");
        for (int k = 0; k < out.r; ++k)
            if ((*sol)[k] != 0) out.coeffs[k].add_term(s, (*sol)[k]);
    }

    // the rational part must fold into the trailing span mod Z^n; unsolvable
    // exactly when the torsion exceeds 1
    std::vector<RatVec> rest;
    for (auto &v : out.vectors) {
        RatVec r(n);
        for (int i = 0; i < n; ++i) r[i] = Rat(v[i]);
        rest.push_back(std::move(r));
    }
    std::vector<IntVec> sat = saturation_basis(n, rest);
    RatVec c(n);
    for (int j = 0; j < n; ++j) c[j] = phi.entries[j].rational;
    auto coords = split_over_saturated(sat, c);
    if (!coords) throw std::invalid_argument("eliminate: torsion > 1, elimination impossible");
    RatVec vpart(n, Rat(0));
    for (size_t k = 0; k < sat.size(); ++k)
        for (int i = 0; i < n; ++i) vpart[i] += (*coords)[k] * Rat(sat[k][i]);
    auto gamma_shift = rat_solve(rows, vpart);
    if (!gamma_shift) throw std::logic_error("eliminate: V-part outside the span of the trailing vectors");
    for (int k = 0; k < out.r; ++k) out.coeffs[k].rational = (*gamma_shift)[k];

    validate_tuple(out, phi);
    return out;
}

// ---- resonance descriptors ----

static DioSystem descriptor_system(const ToricTuple &tuple, int j) {
    DioSystem sys;
    sys.n = tuple.n;
    std::vector<IntVec> rows;
    IntVec rhs;
    int first = tuple.reduced ? 1 : 0;
    for (int k = first; k < tuple.r; ++k) {
        rows.push_back(tuple.vectors[k]);
        rhs.push_back(tuple.vectors[k][j - 1]);
    }
    sys.equations = rows.empty() ? IntMat(0, tuple.n) : IntMat::from_rows(rows);
    sys.rhs = rhs;
    if (tuple.reduced)
        sys.congruences.push_back({tuple.vectors[0], *tuple.m, tuple.vectors[0][j - 1]});
    return sys;
}

ResonanceDescriptor resonance_descriptor(const ToricAnalysis &a, int j) {
    if (j < 1 || j > a.tuple.n) throw std::invalid_argument("coordinate out of range");
    ResonanceDescriptor d;
    d.j = j;
    d.torsion = a.tuple.reduced;
    int first = d.torsion ? 1 : 0;
    for (int k = first; k < a.tuple.r; ++k) d.rows.push_back(a.tuple.vectors[k]);
    if (d.torsion) d.congruence = {a.tuple.vectors[0], *a.tuple.m};
    d.system = descriptor_system(a.tuple, j);
    d.monoid = solve_monoid(d.system);
    for (int h = 1; h <= a.tuple.n; ++h) {
        if (h == j) continue;
        IntVec eh(a.tuple.n, Int(0));
        eh[h - 1] = 1;
        if (d.system.satisfied_by(eh)) d.equal_weight_partners.push_back(h);
    }
    return d;
}

ResonanceDescriptor resonance_descriptor(const PhaseVector &phi, int j) {
    return resonance_descriptor(toric_analysis(phi), j);
}

bool descriptor_member(const ResonanceDescriptor &d, const IntVec &Q) {
    if (total_degree(Q) < 2) return false;
    for (auto &q : Q)
        if (q < 0) return false;
    return d.system.satisfied_by(Q);
}

std::vector<IntVec> enumerate_resonances(const PhaseVector &phi, int j, const Int &max_degree) {
    if (max_degree < 2) throw std::invalid_argument("enumerate_resonances: max degree < 2");
    ToricAnalysis a = toric_analysis(phi);
    ResonanceDescriptor d = resonance_descriptor(a, j);
    std::vector<IntVec> out;
    for (auto &P : enumerate_monoid(d.monoid, max_degree)) {
        if (total_degree(P) < 2) continue;
        if (!is_integral_combination(phi, P, j))
            throw std::logic_error("descriptor produced a non-resonant multi-index");
        out.push_back(P);
    }
    return out;
}

// ---- classification ----

namespace {

struct TorsionCaseData {
    IntVec eta1;
    Int m;
    IntMat eqs; // rows eta^(2..r)
    AffineMonoidDescription plain; // Hilbert basis of the row kernel monoid
};

TorsionCaseData torsion_case_data(const ToricTuple &tuple) {
    TorsionCaseData d;
    d.eta1 = tuple.vectors[0];
    d.m = *tuple.m;
    std::vector<IntVec> rows(tuple.vectors.begin() + 1, tuple.vectors.end());
    d.eqs = rows.empty() ? IntMat(0, tuple.n) : IntMat::from_rows(rows);
    d.plain = hilbert_basis(d.eqs);
    return d;
}

// Is (torsioneimpura2) an identity, i.e. does every element of the additive
// intersection already satisfy the mod-m congruence? Checked on the monoid
// generators and reachable particular solutions; additivity of <.,eta1> makes
// the generator checks complete.
bool impure_case(const ToricTuple &tuple, const TorsionCaseData &d) {
    for (auto &G : d.plain.generators)
        if (dot(G, d.eta1) % d.m != 0) return false;
    for (int j = 1; j <= tuple.n; ++j) {
        IntVec rhs(d.eqs.rows);
        for (int i = 0; i < d.eqs.rows; ++i) rhs[i] = d.eqs(i, j - 1);
        AffineMonoidDescription sols = minimal_inhomogeneous(d.eqs, rhs);
        for (auto &P : sols.particulars) {
            bool reachable = total_degree(P) >= 2 || !d.plain.generators.empty();
            if (!reachable) continue;
            IntVec pe = P;
            pe[j - 1] -= 1;
            if (dot(pe, d.eta1) % d.m != 0) return false;
        }
    }
    return true;
}

} // namespace

namespace {

// Linear system pinning H: the constraint <H, x> = <eta1, x>/m must hold on
// every actual resonance shift x = Q - e_j. Instead of a full Hilbert basis of
// the congruence submonoid, an equivalent system is assembled from
//   (a) a generating set of the lattice spanned by the submonoid (differences
//       of monoid elements realize every integer combination of the plain
//       generators whose pairing with eta1 vanishes mod m), and
//   (b) one witness resonance per inhomogeneous solution family, found by a
//       shortest-path walk over the pairing residues mod m.
struct HSystem {
    std::vector<IntVec> rows;
    IntVec rhs;
    Int maxdeg = 2;
};

HSystem build_h_system(const TorsionCaseData &d, int n) {
    if (d.m > 1000000) throw std::invalid_argument("simplify: torsion denominator too large");
    HSystem sys;
    auto push_row = [&](const IntVec &v) {
        Int val = dot(v, d.eta1);
        if (val % d.m != 0) throw std::logic_error("simplify: constraint row escapes the congruence");
        sys.rows.push_back(v);
        sys.rhs.push_back(val / d.m);
        Int deg = 0;
        for (auto &x : v) deg += abs(x);
        if (deg > sys.maxdeg) sys.maxdeg = deg;
    };

    const auto &gens = d.plain.generators;
    const int k = (int)gens.size();
    long m = (long)d.m;
    std::vector<long> w(k);
    for (int b = 0; b < k; ++b) w[b] = (long)(((dot(gens[b], d.eta1) % d.m) + d.m) % d.m);

    // (a) lattice rows: kernel basis of [w | -m] projected to the generator
    // coordinates, mapped into Z^n
    if (k > 0) {
        IntMat wm(1, k + 1);
        for (int b = 0; b < k; ++b) wm(0, b) = w[b];
        wm(0, k) = -d.m;
        for (auto &kv : integer_kernel(wm)) {
            IntVec x(n, Int(0));
            bool zero = true;
            for (int b = 0; b < k; ++b) {
                if (kv[b] == 0) continue;
                zero = false;
                for (int i = 0; i < n; ++i) x[i] += kv[b] * gens[b][i];
            }
            if (!zero) push_row(x);
        }
    }

    // shortest N-combination of generators per pairing residue
    std::vector<Int> dist(m, Int(-1));
    std::vector<int> via(m, -1);
    std::vector<long> from(m, -1);
    dist[0] = 0;
    for (bool changed = true; changed;) { // Bellman-Ford on a small cyclic graph
        changed = false;
        for (long rho = 0; rho < m; ++rho) {
            if (dist[rho] < 0) continue;
            for (int b = 0; b < k; ++b) {
                long nxt = (rho + w[b]) % m;
                Int cand = dist[rho] + total_degree(gens[b]);
                if (dist[nxt] < 0 || cand < dist[nxt]) {
                    dist[nxt] = cand;
                    via[nxt] = b;
                    from[nxt] = rho;
                    changed = true;
                }
            }
        }
    }
    auto combo_for = [&](long target) {
        IntVec x(n, Int(0));
        long rho = target;
        while (rho != 0) { // predecessor chain strictly decreases the distance
            int b = via[rho];
            for (int i = 0; i < n; ++i) x[i] += gens[b][i];
            rho = from[rho];
        }
        return x;
    };
    // cheapest nonzero combination with vanishing residue
    Int zero_cycle = -1;
    int zero_via = -1;
    for (int b = 0; b < k; ++b) {
        long back = ((m - w[b]) % m + m) % m;
        if (dist[back] < 0) continue;
        Int cand = total_degree(gens[b]) + dist[back];
        if (zero_cycle < 0 || cand < zero_cycle) {
            zero_cycle = cand;
            zero_via = b;
        }
    }

    // (b) one witness per reachable inhomogeneous family, per coordinate
    for (int j = 1; j <= n; ++j) {
        IntVec rhs_j(d.eqs.rows);
        for (int i = 0; i < d.eqs.rows; ++i) rhs_j[i] = d.eqs(i, j - 1);
        AffineMonoidDescription sols = minimal_inhomogeneous(d.eqs, rhs_j);
        for (auto &P : sols.particulars) {
            IntVec pe = P;
            pe[j - 1] -= 1;
            long target = (long)(((dot(pe, d.eta1) % d.m) + d.m) % d.m);
            target = (m - target) % m;
            if (dist[target] < 0) continue; // no resonance in this family
            IntVec witness = P;
            IntVec add = combo_for(target);
            for (int i = 0; i < n; ++i) witness[i] += add[i];
            while (total_degree(witness) < 2) {
                if (zero_via < 0) break;
                IntVec more = combo_for(((m - w[zero_via]) % m + m) % m);
                for (int i = 0; i < n; ++i) witness[i] += more[i] + gens[zero_via][i];
            }
            if (total_degree(witness) < 2) continue;
            if (total_degree(witness) > sys.maxdeg) sys.maxdeg = total_degree(witness);
            IntVec row = witness;
            row[j - 1] -= 1;
            bool zero = std::all_of(row.begin(), row.end(), [](const Int &x) { return x == 0; });
            if (!zero) push_row(row);
        }
    }
    return sys;
}

} // namespace

SimplifyResult simplify_search(const PhaseVector &phi, const ToricTuple &tuple) {
    if (!tuple.reduced || !tuple.m) throw std::invalid_argument("simplify_search: tuple not reduced");
    TorsionCaseData d = torsion_case_data(tuple);
    if (impure_case(tuple, d)) throw std::invalid_argument("simplify_search: not in the pure torsion case");

    const int n = tuple.n;
    SimplifyResult res;

    HSystem hs = build_h_system(d, n);
    res.search_bound = 2 * hs.maxdeg;

    std::optional<IntSolveResult> sol;
    if (hs.rows.empty()) {
        sol = IntSolveResult{IntVec(n, Int(0)), {}};
    } else {
        sol = solve_integer_linear(IntMat::from_rows(hs.rows), hs.rhs);
    }
    if (!sol) {
        res.found = false;
        res.h_system_feasible = false;
        return res;
    }
    res.h_system_feasible = true;

    auto build_tuple = [&](const IntVec &H) {
        ToricTuple s = tuple;
        for (int i = 0; i < n; ++i) s.vectors[0][i] = tuple.vectors[0][i] - d.m * H[i];
        return s;
    };
    // xi1 must stay independent of the trailing vectors; adjust along the kernel
    // if the particular solution degenerates (cannot persist for a minimal tuple).
    IntVec H = sol->particular;
    ToricTuple simple = build_tuple(H);
    if (vectors_rank(simple.vectors) != simple.r) {
        bool fixed = false;
        for (auto &k : sol->kernel) {
            for (int sgn : {1, -1}) {
                IntVec H2 = H;
                for (int i = 0; i < n; ++i) H2[i] += sgn * k[i];
                ToricTuple cand = build_tuple(H2);
                if (vectors_rank(cand.vectors) == cand.r) {
                    H = H2;
                    simple = cand;
                    fixed = true;
                    break;
                }
            }
            if (fixed) break;
        }
        if (!fixed) throw std::logic_error("simplify: every solution degenerates the tuple");
    }
    validate_tuple(simple, phi);

    res.found = true;
    res.H = H;
    res.simple_tuple = simple;
    return res;
}

Classification classify(const PhaseVector &phi) {
    ToricAnalysis a = toric_analysis(phi);
    Classification c;
    c.witness = a.tuple;
    if (!a.tuple.reduced) {
        c.kind = TorsionKind::TorsionFree;
        return c;
    }
    TorsionCaseData d = torsion_case_data(a.tuple);
    if (impure_case(a.tuple, d)) {
        c.kind = TorsionKind::ImpureTorsion;
        return c;
    }
    SimplifyResult s = simplify_search(phi, a.tuple);
    c.simplify = s;
    c.kind = s.found ? TorsionKind::PureTorsionSimplifiable : TorsionKind::PureTorsionNotSimplified;
    if (s.found) c.witness = s.simple_tuple;
    return c;
}

bool theta_resonant(const IntVec &Q, int j, const IntMat &theta) {
    int n = theta.rows;
    if ((int)Q.size() != n) throw std::invalid_argument("theta_resonant: dimension mismatch");
    if (j < 1 || j > n) throw std::invalid_argument("theta_resonant: coordinate out of range");
    Int deg = total_degree(Q);
    if (deg < 1) throw std::invalid_argument("theta_resonant: |Q| < 1");
    if (deg == 1) {
        int h = 0;
        while (Q[h] == 0) ++h;
        for (int k = 0; k < theta.cols; ++k)
            if (theta(h, k) != theta(j - 1, k)) return false;
        return true;
    }
    for (int k = 0; k < theta.cols; ++k) {
        Int acc = 0;
        for (int i = 0; i < n; ++i) acc += Q[i] * theta(i, k);
        if (acc != theta(j - 1, k)) return false;
    }
    return true;
}

bool compatible(const IntMat &theta, const std::vector<std::pair<std::string, int>> &jordan) {
    int pos = 0;
    for (auto &[label, size] : jordan) {
        for (int i = 1; i < size; ++i) {
            int j = pos + i; // subdiagonal monomial z_{j-1} e_j (1-based: rows j-1,j)
            for (int k = 0; k < theta.cols; ++k)
                if (theta(j - 1, k) != theta(j, k)) return false;
        }
        pos += size;
    }
    if (pos != theta.rows) throw std::invalid_argument("compatible: block sizes do not sum to n");
    return true;
}

VerdictReport normalization_verdict(const PhaseVector &phi, bool diagonalizable) {
    Classification c = classify(phi);
    VerdictReport v;
    v.kind = c.kind;
    v.compatibility_required = !diagonalizable;

    std::vector<std::pair<int, int>> equal_pairs; // (j, h) zero-based, h < j, representative h
    for (int j = 0; j < phi.dim(); ++j)
        for (int h = 0; h < j; ++h)
            if (phi.entries[j] == phi.entries[h]) {
                equal_pairs.push_back({j, h});
                break;
            }

    const ToricTuple &w = c.witness;
    switch (c.kind) {
    case TorsionKind::TorsionFree:
        v.torus_dimension = w.r;
        v.weight_matrix = w.vectors;
        v.criterion_iff = true;
        if (!diagonalizable) v.compatible_tuple_found = true; // rows agree on equal phases
        break;
    case TorsionKind::ImpureTorsion: {
        v.torus_dimension = w.r - 1;
        v.weight_matrix.assign(w.vectors.begin() + 1, w.vectors.end());
        v.criterion_iff = true;
        if (!diagonalizable) v.compatible_tuple_found = true;
        break;
    }
    case TorsionKind::PureTorsionSimplifiable: {
        v.torus_dimension = w.r;
        v.weight_matrix = w.vectors;
        v.criterion_iff = true;
        if (!diagonalizable) {
            // re-run the H-search with the equal-phase row equalities adjoined
            ToricAnalysis a = toric_analysis(phi);
            const ToricTuple &t = a.tuple;
            TorsionCaseData d = torsion_case_data(t);
            HSystem hs = build_h_system(d, t.n);
            for (auto &[j, h] : equal_pairs) {
                IntVec e(t.n, Int(0));
                e[j] = 1;
                e[h] = -1;
                Int diff = d.eta1[j] - d.eta1[h];
                if (diff % d.m != 0) throw std::logic_error("equal phases with incompatible eta1 mod m");
                hs.rows.push_back(e);
                hs.rhs.push_back(diff / d.m);
            }
            std::optional<IntSolveResult> sol;
            if (hs.rows.empty())
                sol = IntSolveResult{IntVec(t.n, Int(0)), {}};
            else
                sol = solve_integer_linear(IntMat::from_rows(hs.rows), hs.rhs);
            if (sol) {
                ToricTuple s = t;
                for (int i = 0; i < t.n; ++i) s.vectors[0][i] -= d.m * sol->particular[i];
                if (vectors_rank(s.vectors) == s.r) {
                    v.compatible_tuple_found = true;
                    v.compatible_weight_matrix = s.vectors;
                } else {
                    v.compatible_tuple_found = false;
                }
            } else {
                v.compatible_tuple_found = false;
            }
        }
        break;
    }
    case TorsionKind::PureTorsionNotSimplified: {
        v.torus_dimension = w.r;
        ToricTuple adj = w;
        if (!diagonalizable) {
            for (auto &[j, h] : equal_pairs) adj.vectors[0][j] = adj.vectors[0][h];
            v.compatible_tuple_found = true;
        }
        v.weight_matrix = adj.vectors;
        v.criterion_iff = false;
        break;
    }
    }
    return v;
}

bool representable(const PhaseVector &phi, const std::vector<IntVec> &vectors) {
    const int n = phi.dim();
    std::vector<RatVec> rows(n, RatVec(vectors.size()));
    for (int i = 0; i < n; ++i)
        for (size_t k = 0; k < vectors.size(); ++k) rows[i][k] = Rat(vectors[k][i]);
    for (auto &[s, v] : symbol_vectors(phi))
        if (!rat_solve(rows, v)) return false;
    std::vector<RatVec> spanning;
    for (auto &v : vectors) {
        RatVec r(n);
        for (int i = 0; i < n; ++i) r[i] = Rat(v[i]);
        spanning.push_back(std::move(r));
    }
    std::vector<IntVec> sat = saturation_basis(n, spanning);
    RatVec c(n);
    for (int j = 0; j < n; ++j) c[j] = phi.entries[j].rational;
    return split_over_saturated(sat, c).has_value();
}

} // namespace torictool
