// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include "oracles.hpp"
#include "torictool/jet.hpp"
#include "torictool/textio.hpp"
#include "torictool/toric.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace torictool;
using namespace torictool::testing;

namespace {

struct Harness {
    int failures = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

const char *EX_DEG1 = "symbols sqrt2 i\nphi 1 = 1/6*sqrt2 + 1/6*i\nphi 2 = 1/3*sqrt2 + 1/3*i\nphi 3 = 5/6*sqrt2 + 5/6*i\n";
const char *EX_REMARK43 = "symbols sqrt2 i\nphi 1 = 3*sqrt2 + 4*i\nphi 2 = 2*sqrt2 + 6*i\nphi 3 = -1*sqrt2 + 2*i\n";
const char *EX_REDUCE = "symbols sqrt2\nphi 1 = 1/6 + 1*sqrt2\nphi 2 = 1/2 - 1*sqrt2\n";
const char *EX_DEG3 = "symbols sqrt2 i\nphi 1 = 1/2\nphi 2 = 1*sqrt2\nphi 3 = 1*i\n";
const char *EX_PHI2 = "symbols sqrt2 i\nphi 1 = 1/2*sqrt2\nphi 2 = 1/2*sqrt2 + 1/2*i\nphi 3 = -1 + 3/2*sqrt2 + 1/2*i\n";
const char *EX_TAU2 = "symbols sqrt2\nphi 1 = 1/6 + 1*sqrt2\nphi 2 = 1/2 - 6*sqrt2\n";
const char *EX_TAU7 = "symbols sqrt2\nphi 1 = 1/7 + 1*sqrt2\nphi 2 = 3/7 - 6*sqrt2\n";
const char *EX_TORSIONFREE2 = "symbols sqrt2 i\nphi 1 = 3*sqrt2 + 4*i\nphi 2 = 2*sqrt2 - 6*i\nphi 3 = -1*sqrt2 + 2*i\n";
const char *EX_IMPURE = "symbols sqrt2 sqrt3\nphi 1 = -12*sqrt2\nphi 2 = 5*sqrt3\nphi 3 = 1/3 + 2*sqrt3\nphi 4 = 1/3 + 1*sqrt2\n";
const char *EX_SIMPLIFIABLE = "symbols sqrt2 sqrt3\nphi 1 = 1/3 + 1*sqrt2\nphi 2 = 1/3 + 6*sqrt2\nphi 3 = 1/3 - 1*sqrt3\nphi 4 = 1/3 + 5*sqrt3\n";
const char *EX_EMPTYRES = "symbols sqrt2\nphi 1 = 1/6 + 1*sqrt2\nphi 2 = 1/2 + 6*sqrt2\n";
const char *EX_HALF = "phi 1 = 1/2\n";

std::vector<const char *> corpus() {
    return {EX_DEG1, EX_REMARK43, EX_REDUCE,       EX_DEG3,     EX_PHI2,         EX_TAU2,
            EX_TAU7, EX_IMPURE,   EX_SIMPLIFIABLE, EX_EMPTYRES, EX_TORSIONFREE2, EX_HALF};
}

PhaseVector random_phase(Rng &rng) {
    SymbolBasis basis({"s1", "s2"});
    int n = (int)rng.pick(1, 5);
    std::vector<SymbolicScalar> e(n);
    for (int j = 0; j < n; ++j) {
        if (rng.pick(0, 2)) e[j].rational = Rat(rng.pick(-9, 9), rng.pick(1, 9));
        for (int s = 0; s < 2; ++s)
            if (rng.pick(0, 2) == 0) e[j].add_term(s, Rat(rng.pick(-9, 9), rng.pick(1, 9)));
    }
    return PhaseVector(basis, e);
}

ToricTuple random_reduced_tuple(Rng &rng) {
    SymbolBasis basis({"s1", "s2"});
    while (true) {
        int n = (int)rng.pick(2, 4);
        ToricTuple t;
        t.basis = basis;
        t.n = n;
        Int m = rng.pick(2, 9);
        IntVec eta1(n);
        for (int j = 0; j < n; ++j) eta1[j] = rng.pick(-6, 6);
        Int g = m;
        for (auto &x : eta1) g = gcd(g, x);
        if (g != 1) continue;
        int extra = (int)rng.pick(1, std::min(2, n - 1));
        std::vector<IntVec> rest;
        for (int k = 0; k < extra; ++k) {
            IntVec v(n);
            bool nz = false;
            for (int j = 0; j < n; ++j) {
                v[j] = rng.pick(-5, 5);
                if (v[j] != 0) nz = true;
            }
            if (nz) rest.push_back(v);
        }
        if (rest.empty()) continue;
        t.vectors.push_back(eta1);
        for (auto &v : rest) t.vectors.push_back(v);
        t.r = (int)t.vectors.size();
        t.coeffs.push_back(SymbolicScalar(Rat(1, m)));
        for (int k = 1; k < t.r; ++k) t.coeffs.push_back(SymbolicScalar::symbol(k - 1));
        t.reduced = true;
        t.m = m;
        std::vector<RatVec> rows;
        for (auto &v : t.vectors) {
            RatVec rr(n);
            for (int i = 0; i < n; ++i) rr[i] = Rat(v[i]);
            rows.push_back(rr);
        }
        if (rat_rank(rows) != t.r) continue;
        return t;
    }
}

using GQ = GaussianRational;
GQ gq(long re, long im = 0) { return GQ{Rat(re), Rat(im)}; }
MultiIndex mi(std::initializer_list<int> xs) { return MultiIndex(xs); }

template <class S> BigFloat jet_distance(const JetMap<S> &a, const JetMap<S> &b);
template <> BigFloat jet_distance(const JetMap<BigComplex> &a, const JetMap<BigComplex> &b) {
    BigFloat worst(a.prec);
    for (int j = 0; j < a.n; ++j) {
        Poly<BigComplex> diff = poly_sub(a.full_component(j), b.full_component(j));
        for (auto &[q, c] : diff) {
            BigFloat m = c.abs();
            if (m > worst) worst = m;
        }
    }
    return worst;
}

bool exact_equal(const JetMap<GQ> &a, const JetMap<GQ> &b) {
    for (int j = 0; j < a.n; ++j)
        if (!poly_sub(a.full_component(j), b.full_component(j)).empty()) return false;
    return true;
}

// ---- criteria ----

void criterion_1(Harness &h) {
    struct Case {
        const char *text;
        int degree;
    } cases[] = {{EX_DEG1, 1}, {EX_REMARK43, 2}, {EX_REDUCE, 2}, {EX_DEG3, 3}, {EX_PHI2, 2}};
    for (auto &[text, degree] : cases) {
        PhaseVector phi = parse_phase_file(text);
        ToricAnalysis a = toric_analysis(phi);
        h.require(a.degree == degree, "toric degree mismatch");
        try {
            validate_tuple(a.tuple, phi);
        } catch (const std::exception &e) {
            h.require(false, std::string("tuple validation: ") + e.what());
        }
    }
}

void criterion_2(Harness &h) {
    TorsionReport t2 = torsion(parse_phase_file(EX_TAU2));
    h.require(t2.tau == 2, "tau(1/6 case) != 2");
    h.require(t2.q == 9, "S != 9Z");
    h.require(torsion(parse_phase_file(EX_TAU7)).tau == 7, "tau(1/7 case) != 7");
    for (const char *text : {EX_DEG1, EX_REMARK43, EX_PHI2, EX_TORSIONFREE2}) {
        h.require(torsion(parse_phase_file(text)).tau == 1, "torsion-free corpus instance with tau != 1");
    }
    Rng rng(31337);
    for (int it = 0; it < 200; ++it) {
        ToricTuple t = random_reduced_tuple(rng);
        TorsionReport rep = torsion_of_reduced(t);
        h.require(rep.m % rep.tau == 0, "tau does not divide m");
    }
}

void criterion_3(Harness &h) {
    PhaseVector first = parse_phase_file(EX_REMARK43);
    auto r2 = enumerate_resonances(first, 2, Int(10));
    h.require(r2 == std::vector<IntVec>{iv({1, 0, 1})}, "Res_2 of the first example");
    h.require(enumerate_resonances(first, 1, Int(10)).empty(), "Res_1 of the first example");
    h.require(enumerate_resonances(first, 3, Int(10)).empty(), "Res_3 of the first example");

    PhaseVector second = parse_phase_file(EX_TORSIONFREE2);
    std::vector<IntVec> w1, w2, w3;
    for (long q = 1; 19 * q + 1 <= 40; ++q) {
        w1.push_back(iv({q + 1, 5 * q, 13 * q}));
        w2.push_back(iv({q, 5 * q + 1, 13 * q}));
        w3.push_back(iv({q, 5 * q, 13 * q + 1}));
    }
    h.require(enumerate_resonances(second, 1, Int(40)) == w1, "family 1 of the second example");
    h.require(enumerate_resonances(second, 2, Int(40)) == w2, "family 2 of the second example");
    h.require(enumerate_resonances(second, 3, Int(40)) == w3, "family 3 of the second example");

    PhaseVector seventh = parse_phase_file(EX_TAU7);
    h.require(enumerate_resonances(seventh, 1, Int(50)) == std::vector<IntVec>{iv({43, 7})},
              "Res_1 of the (1/7) example up to 50");

    for (const char *text : corpus()) {
        PhaseVector phi = parse_phase_file(text);
        ToricAnalysis a = toric_analysis(phi);
        for (int j = 1; j <= phi.dim(); ++j) {
            ResonanceDescriptor d = resonance_descriptor(a, j);
            bool ok = true;
            for_each_multiindex(phi.dim(), 10, [&](const IntVec &q) {
                if (total_degree(q) < 2) return;
                if (descriptor_member(d, q) != is_integral_combination(phi, q, j)) ok = false;
            });
            h.require(ok, "descriptor/oracle disagreement");
        }
    }
}

void criterion_4(Harness &h) {
    h.require(classify(parse_phase_file(EX_IMPURE)).kind == TorsionKind::ImpureTorsion,
              "impure example misclassified");

    PhaseVector phi = parse_phase_file(EX_SIMPLIFIABLE);
    Classification c = classify(phi);
    h.require(c.kind == TorsionKind::PureTorsionSimplifiable, "simplifiable example misclassified");
    if (c.simplify && c.simplify->found) {
        ToricTuple simple = c.simplify->simple_tuple;
        ToricTuple paper = simple;
        paper.vectors[0] = iv({1, -2, 1, -5});
        try {
            validate_tuple(simple, phi);
            validate_tuple(paper, phi); // the published simple tuple passes the validator
        } catch (const std::exception &e) {
            h.require(false, std::string("simple tuple validation: ") + e.what());
        }
        IntMat theta = IntMat::from_cols(simple.vectors);
        IntMat theta_paper = IntMat::from_cols(paper.vectors);
        bool ok = true;
        for_each_multiindex(4, 12, [&](const IntVec &q) {
            if (total_degree(q) < 2) return;
            for (int j = 1; j <= 4; ++j) {
                bool res = is_integral_combination(phi, q, j);
                if (res != theta_resonant(q, j, theta)) ok = false;
                if (res != theta_resonant(q, j, theta_paper)) ok = false;
            }
        });
        h.require(ok, "simple tuple resonances differ from the additive intersection up to 12");
    } else {
        h.require(false, "no simple tuple produced");
    }

    PhaseVector seventh = parse_phase_file(EX_TAU7);
    Classification c7 = classify(seventh);
    h.require(c7.kind == TorsionKind::PureTorsionNotSimplified, "(1/7) example misclassified");
    h.require(c7.simplify && !c7.simplify->h_system_feasible, "H-system not reported infeasible");
}

void criterion_5(Harness &h) {
    LatticeBasis L;
    L.ambient = 4;
    L.basis = integer_kernel(IntMat::from_rows({iv({1, -1, -1, 1})}));
    PaperMinimals m = paper_minimal_elements(L);
    std::vector<IntVec> got;
    for (auto &e : m.elements) got.push_back(e.element);
    std::sort(got.begin(), got.end(), graded_lex_less);
    std::vector<IntVec> want = {iv({0, 0, 1, 1}), iv({0, 1, 0, 1}), iv({1, 0, 1, 0}), iv({1, 1, 0, 0})};
    h.require(got == want, "the four minimal elements");

    CominimalSet c = cominimal_elements(L, m, Int(24));
    h.require(c.elements.empty(), "cominimal set not empty");
    h.require(c.certified, "cominimal exhaustion not certified");

    LatticeConstraints cons = lattice_constraints(L);
    bool ok = true;
    for_each_multiindex(4, 12, [&](const IntVec &x) {
        if (!lattice_contains(cons, x)) return;
        Decomposition d = decompose(x, L, m, c);
        IntVec rebuilt(4, Int(0));
        if (d.cominimal_index)
            for (int i = 0; i < 4; ++i) rebuilt[i] += c.elements[*d.cominimal_index][i];
        for (size_t k = 0; k < m.elements.size(); ++k)
            for (int i = 0; i < 4; ++i) rebuilt[i] += d.multiplicities[k] * m.elements[k].element[i];
        if (rebuilt != x) ok = false;
    });
    h.require(ok, "decomposition identity fails below degree 12");
}

void criterion_6(Harness &h) {
    Rng rng(555);
    for (int it = 0; it < 200; ++it) {
        PhaseVector phi = random_phase(rng);
        if (phi.is_zero()) continue;
        TorsionReport rep = torsion(phi);
        Classification c = classify(phi);
        h.require((c.kind == TorsionKind::TorsionFree) == (rep.tau == 1), "torsion-free iff tau=1");
        if (rep.tau != 1) continue;
        // rational part present? build the unabsorbed reduced-style candidate and eliminate
        RatVec cpart(phi.dim());
        bool has_rational = false;
        for (int j = 0; j < phi.dim(); ++j) {
            cpart[j] = phi.entries[j].rational;
            if (cpart[j] != 0) has_rational = true;
        }
        if (!has_rational) continue;
        ToricAnalysis a = toric_analysis(phi);
        Int m0 = 1;
        for (auto &q : cpart) m0 = lcm(m0, den(q));
        if (m0 < 2) continue;
        IntVec g(phi.dim());
        for (int j = 0; j < phi.dim(); ++j) g[j] = num(cpart[j] * Rat(m0));
        Int d = m0;
        for (auto &x : g) d = gcd(d, x);
        Int m = m0 / d;
        if (m < 2) continue;
        ToricTuple cand;
        cand.basis = phi.basis;
        cand.n = phi.dim();
        cand.vectors.push_back(IntVec{});
        cand.vectors[0].resize(phi.dim());
        for (int j = 0; j < phi.dim(); ++j) cand.vectors[0][j] = g[j] / d;
        for (auto &v : a.tuple.vectors) cand.vectors.push_back(v);
        cand.r = (int)cand.vectors.size();
        cand.coeffs.push_back(SymbolicScalar(Rat(1, m)));
        for (auto &cc : a.tuple.coeffs) {
            SymbolicScalar s = cc.symbol_part();
            cand.coeffs.push_back(s);
        }
        cand.reduced = true;
        cand.m = m;
        try {
            ToricTuple out = eliminate_rational_coefficient(cand);
            validate_tuple(out, phi); // recombines exactly
        } catch (const std::exception &e) {
            h.require(false, std::string("elimination failed on a tau=1 instance: ") + e.what());
        }
    }
}

void criterion_7(Harness &h) {
    long P = 256;
    // commuting-check iff property on 100 randomized pairs
    Rng rng(99);
    int flips = 0;
    while (flips < 100) {
        int n = (int)rng.pick(2, 3);
        int rr = (int)rng.pick(1, 2);
        IntMat theta(n, rr);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < rr; ++k) theta(i, k) = rng.pick(-2, 2);
        std::vector<std::pair<MultiIndex, int>> res, nonres;
        for_each_multiindex(n, 4, [&](const IntVec &q) {
            if (total_degree(q) < 2) return;
            MultiIndex m(q.size());
            for (size_t i = 0; i < q.size(); ++i) m[i] = (int)q[i];
            for (int j = 1; j <= n; ++j)
                (theta_resonant(q, j, theta) ? res : nonres).push_back({m, j});
        });
        if (nonres.empty()) continue;
        JetMap<GQ> f;
        f.n = n;
        f.D = 4;
        f.lambda.assign(n, gq(2));
        f.eps.assign(n, 0);
        f.higher.assign(n, {});
        for (auto &[m, j] : res)
            if (rng.pick(0, 1)) poly_add_term(f.higher[j - 1], m, gq(rng.pick(1, 3)));
        h.require(commutation_check(f, theta).commutes, "resonant germ must commute");
        auto &[m, j] = nonres[rng.pick(0, (long)nonres.size() - 1)];
        poly_add_term(f.higher[j - 1], m, gq(1));
        CommutationWitness w = commutation_check(f, theta);
        bool witness_ok = !w.commutes;
        bool found = false;
        for (auto &[wm, wj] : w.offending)
            if (wm == m && wj == j) found = true;
        h.require(witness_ok && found, "insertion must flip the verdict with the right witness");
        poly_add_term(f.higher[j - 1], m, gq(-1));
        h.require(commutation_check(f, theta).commutes, "removal must restore commutation");
        ++flips;
    }

    // exact-mode conjugacy residual is identically zero
    Rng rng2(2718);
    for (int it = 0; it < 20; ++it) {
        int n = 2, D = (int)rng2.pick(2, 4);
        JetMap<GQ> f;
        f.n = n;
        f.D = D;
        f.lambda = {GQ{Rat(1, 2), Rat(0)}, GQ{Rat(1, 4), Rat(0)}};
        f.eps.assign(n, 0);
        f.higher.assign(n, {});
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < 3; ++t) {
                MultiIndex q{(int)rng2.pick(0, D), (int)rng2.pick(0, D)};
                if (mi_degree(q) < 2 || mi_degree(q) > D) continue;
                poly_add_term(f.higher[j], q, gq(rng2.pick(-3, 3), rng2.pick(-2, 2)));
            }
        PDResult<GQ> r = pd_normalize(f);
        h.require(exact_equal(compose(r.psi, r.g), compose(f, r.psi)), "exact residual nonzero");
    }

    // phase-mode residual below 2^-236 relative on the corpus
    for (const char *text : {EX_TAU2, EX_TAU7, EX_REMARK43}) {
        PhaseVector phi = parse_phase_file(text);
        int n = phi.dim();
        JetMap<BigComplex> f;
        f.n = n;
        f.D = 3;
        f.prec = P;
        f.lambda.assign(n, BigComplex::from_long(1, P));
        f.eps.assign(n, 0);
        f.higher.assign(n, {});
        Rng rng3(4000 + n);
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < 2; ++t) {
                MultiIndex q(n, 0);
                int deg = 0;
                for (int i = 0; i < n; ++i) {
                    q[i] = (int)rng3.pick(0, 2);
                    deg += q[i];
                }
                if (deg < 2 || deg > 3) continue;
                poly_add_term(f.higher[j], q,
                              BigComplex{BigFloat::from_long(rng3.pick(-3, 3), P),
                                         BigFloat::from_rat(Rat(rng3.pick(-2, 2), 2), P)});
            }
        PhaseLink link;
        link.phi = phi;
        link.coord.resize(n);
        for (int j = 0; j < n; ++j) link.coord[j] = j + 1;
        f.link = link;
        PDOptions opts;
        opts.prec = P;
        for (auto &name : phi.basis.names) opts.symbol_values[name] = resolve_symbol_value(name, "", P);
        PDResult<BigComplex> r = pd_normalize(f, opts);
        JetMap<BigComplex> fn = f;
        fn.lambda = r.g.lambda;
        BigFloat resid = jet_distance(compose(r.psi, r.g), compose(fn, r.psi));
        // relative to the conjugacy data: small divisors scale psi, and the
        // residual floor scales with it
        BigFloat scale = BigFloat::from_long(1, P);
        for (int j = 0; j < n; ++j)
            for (const Poly<BigComplex> *p : {&fn.higher[j], &r.psi.higher[j], &r.g.higher[j]})
                for (auto &[q, c] : *p) {
                    BigFloat m = c.abs();
                    if (m > scale) scale = m;
                }
        h.require(resid < scale * BigFloat::pow2(-236, P), "phase-mode residual above 2^-236 relative");
    }

    // flow group law and derivative
    {
        JetField<BigComplex> x = JetField<BigComplex>::zero(2, 3, P);
        x.dia[0] = BigComplex{BigFloat::from_rat(Rat(1, 2), P), BigFloat(P)};
        x.dia[1] = BigComplex{BigFloat::from_rat(Rat(1, 4), P), BigFloat(P)};
        poly_add_term(x.higher[0], mi({0, 2}), BigComplex::from_long(2, P));
        x.normal_form_flag = true;
        BigComplex s{BigFloat::from_rat(Rat(2, 3), P), BigFloat(P)};
        BigComplex t{BigFloat::from_rat(Rat(-1, 5), P), BigFloat(P)};
        BigFloat law = jet_distance(compose(flow(x, s), flow(x, t)), flow(x, s + t));
        h.require(law < BigFloat::pow2(-200, P), "flow group law above 2^-200");

        BigComplex hh{BigFloat::pow2(-(P / 2), P), BigFloat(P)};
        JetMap<BigComplex> fp = flow(x, hh);
        JetMap<BigComplex> fm = flow(x, BigComplex(P) - hh);
        BigFloat inv2h = BigFloat::from_long(1, P) / (hh.re + hh.re);
        BigFloat worst(P);
        for (int j = 0; j < 2; ++j) {
            Poly<BigComplex> d = poly_sub(fp.full_component(j), fm.full_component(j));
            Poly<BigComplex> xc = x.full_component(j);
            for (auto &[q, c] : d) {
                BigComplex approx{c.re * inv2h, c.im * inv2h};
                BigComplex truth(P);
                if (auto it = xc.find(q); it != xc.end()) truth = it->second;
                BigFloat err = (approx - truth).abs();
                if (err > worst) worst = err;
            }
        }
        h.require(worst < BigFloat::pow2(-100, P), "flow derivative check fails");
    }

    // normal-form flow checks: 20 passing, 20 failing with witnesses
    Rng rng4(1212);
    for (int it = 0; it < 20; ++it) {
        JetField<BigComplex> good = JetField<BigComplex>::zero(2, 3, P);
        Rat base(rng4.pick(1, 4), rng4.pick(1, 3));
        good.dia[0] = BigComplex{BigFloat::from_rat(base, P), BigFloat(P)};
        good.dia[1] = BigComplex{BigFloat::from_rat(base / 2, P), BigFloat(P)};
        poly_add_term(good.higher[0], mi({0, 2}),
                      BigComplex{BigFloat::from_rat(Rat(rng4.pick(-3, 3)), P), BigFloat(P)});
        h.require(flow_normal_form_check(good).ok, "normal-form field rejected");
        JetField<BigComplex> bad = good;
        poly_add_term(bad.higher[1], mi({2, 0}), BigComplex::from_long(1, P));
        FieldCheckResult r = flow_normal_form_check(bad);
        h.require(!r.ok && r.witness.has_value(), "perturbed field accepted");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<void(Harness &)> fn;
        double budget_seconds;
    } criteria[] = {
        {"1. toric degree regression", criterion_1, 1.0},
        {"2. torsion regression", criterion_2, 60.0},
        {"3. resonance enumeration", criterion_3, 5.0},
        {"4. classification regression", criterion_4, 60.0},
        {"5. monoid machinery", criterion_5, 60.0},
        {"6. torsion-free iff tau=1 suite", criterion_6, 60.0},
        {"7. germ suite", criterion_7, 60.0},
    };

    int failed = 0;
    for (auto &c : criteria) {
        Harness h;
        auto start = std::chrono::steady_clock::now();
        try {
            c.fn(h);
        } catch (const std::exception &e) {
            h.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) h.require(false, "over time budget");
        if (h.failures == 0) {
            std::cout << "PASS " << c.name << " (" << secs << "s)\n";
        } else {
            ++failed;
            std::cout << "FAIL " << c.name << " (" << secs << "s)\n";
            for (auto &n : h.notes) std::cout << "     - " << n << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
