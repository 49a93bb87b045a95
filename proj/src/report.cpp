#include "torictool/report.hpp"

#include <algorithm>
#include <sstream>

namespace torictool {

using json = nlohmann::ordered_json;

namespace {

json j_int(const Int &v) {
    static const Int lim = Int(1) << 53;
    if (abs(v) < lim) return (int64_t)v;
    return v.str();
}

json j_vec(const IntVec &v) {
    json a = json::array();
    for (auto &x : v) a.push_back(j_int(x));
    return a;
}

json j_vecs(const std::vector<IntVec> &vs) {
    json a = json::array();
    for (auto &v : vs) a.push_back(j_vec(v));
    return a;
}

json j_mi(const MultiIndex &q) {
    json a = json::array();
    for (int x : q) a.push_back(x);
    return a;
}

json j_sym(const SymbolicScalar &s, const SymbolBasis &basis) {
    json o;
    o["rational"] = rat_to_string(s.rational);
    json syms = json::object();
    for (auto &[idx, c] : s.coeffs) syms[basis.names[idx]] = rat_to_string(c);
    o["symbols"] = syms;
    return o;
}

json j_tuple(const ToricTuple &t) {
    json o;
    o["vectors"] = j_vecs(t.vectors);
    json cs = json::array();
    for (auto &c : t.coeffs) cs.push_back(j_sym(c, t.basis));
    o["coefficients"] = cs;
    o["reduced"] = t.reduced;
    o["m"] = t.m ? j_int(*t.m) : json(nullptr);
    return o;
}

json j_simplify(const SimplifyResult &s) {
    json o;
    if (s.found) {
        o["H"] = j_vec(s.H);
        o["simple_tuple"] = j_tuple(s.simple_tuple);
        o["certified"] = true;
    } else {
        o["status"] = "not_found";
        o["h_system"] = s.h_system_feasible ? "degenerate" : "infeasible";
        o["search_bound"] = j_int(s.search_bound);
        o["certified"] = false;
    }
    return o;
}

std::string criterion_name(bool iff) { return iff ? "iff" : "sufficient"; }

json j_verdict(const VerdictReport &v) {
    json o;
    o["torus_dimension"] = v.torus_dimension;
    o["weight_matrix"] = j_vecs(v.weight_matrix);
    o["criterion"] = criterion_name(v.criterion_iff);
    o["compatibility_required"] = v.compatibility_required;
    if (v.compatible_tuple_found) o["compatible_tuple_found"] = *v.compatible_tuple_found;
    if (v.compatible_weight_matrix) o["compatible_weight_matrix"] = j_vecs(*v.compatible_weight_matrix);
    return o;
}

PhaseVector parse_phases_or_throw(const std::string &text) {
    try {
        return parse_phase_file(text);
    } catch (const ParseError &e) {
        throw ToolError(1, "parse_error", e.what());
    }
}

ParsedGerm parse_germ_or_throw(const std::string &text) {
    try {
        return parse_germ_file(text);
    } catch (const ParseError &e) {
        throw ToolError(1, "parse_error", e.what());
    }
}

void strict_descriptor_scan(const PhaseVector &phi, const ToricAnalysis &a, const Int &bound) {
    int n = phi.dim();
    Int cap = bound < 8 ? bound : Int(8);
    std::vector<ResonanceDescriptor> ds;
    for (int j = 1; j <= n; ++j) ds.push_back(resonance_descriptor(a, j));
    MultiIndex cur(n, 0);
    auto rec = [&](auto &&self, int pos, int left) -> void {
        if (pos == n) {
            IntVec q(n);
            for (int i = 0; i < n; ++i) q[i] = cur[i];
            if (total_degree(q) < 2) return;
            for (int j = 1; j <= n; ++j) {
                bool oracle = is_integral_combination(phi, q, j);
                bool desc = descriptor_member(ds[j - 1], q);
                if (oracle != desc)
                    throw ToolError(2, "internal_error", "descriptor/oracle mismatch in strict mode");
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, (int)cap);
}

// strict cross-validation of a simple tuple: resonances match the full additive
// intersection up to the bound
void strict_simple_check(const PhaseVector &phi, const ToricTuple &simple, const Int &bound) {
    int n = phi.dim();
    IntMat theta = IntMat::from_cols(simple.vectors);
    MultiIndex cur(n, 0);
    auto rec = [&](auto &&self, int pos, int left) -> void {
        if (pos == n) {
            IntVec q(n);
            for (int i = 0; i < n; ++i) q[i] = cur[i];
            if (total_degree(q) < 2) return;
            for (int j = 1; j <= n; ++j) {
                bool oracle = is_integral_combination(phi, q, j);
                bool additive = theta_resonant(q, j, theta);
                if (oracle != additive)
                    throw ToolError(2, "internal_error", "simple tuple failed strict resonance check");
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    long b = (long)std::min(bound, Int(14));
    rec(rec, 0, (int)b);
}

json analyze_report(const PhaseVector &phi, const RunOptions &opts) {
    ToricAnalysis a = toric_analysis(phi);
    TorsionReport tr = a.tuple.reduced ? torsion_of_reduced(a.tuple) : TorsionReport{};
    Classification cls = classify(phi);
    VerdictReport verdict = normalization_verdict(phi, opts.diagonalizable);

    if (opts.strict) {
        strict_descriptor_scan(phi, a, opts.max_degree);
        if (cls.simplify && cls.simplify->found) {
            Int b = opts.comin_bound ? *opts.comin_bound : cls.simplify->search_bound;
            strict_simple_check(phi, cls.simplify->simple_tuple, b);
        }
    }

    json o;
    o["toric_degree"] = a.degree;
    o["tuple"] = j_tuple(a.tuple);
    o["torsion"] = {{"m", j_int(tr.m)}, {"q", j_int(tr.q)}, {"tau", j_int(tr.tau)}};
    o["classification"] = torsion_kind_name(cls.kind);
    if (cls.simplify) o["simplify"] = j_simplify(*cls.simplify);
    o["verdict"] = j_verdict(verdict);
    return o;
}

json resonances_report(const PhaseVector &phi, const RunOptions &opts) {
    int n = phi.dim();
    if (opts.coordinate < 0 || opts.coordinate > n)
        throw ToolError(2, "precondition", "coordinate out of range");
    if (opts.max_degree < 2) throw ToolError(2, "precondition", "max degree must be >= 2");
    ToricAnalysis a = toric_analysis(phi);
    auto one = [&](int j) {
        ResonanceDescriptor d = resonance_descriptor(a, j);
        json o;
        o["coordinate"] = j;
        o["max_degree"] = j_int(opts.max_degree);
        json mi = json::array();
        for (auto &P : enumerate_monoid(d.monoid, opts.max_degree)) {
            if (total_degree(P) < 2) continue;
            if (!is_integral_combination(phi, P, j))
                throw ToolError(2, "internal_error", "descriptor emitted a non-resonance");
            mi.push_back(j_vec(P));
        }
        o["resonant_multi_indices"] = mi;
        json gens;
        gens["homogeneous"] = j_vecs(d.monoid.generators);
        gens["particular"] = j_vecs(d.monoid.particulars);
        gens["lattice_rows"] = j_vecs(d.rows);
        if (d.congruence)
            gens["congruence"] = {{"vector", j_vec(d.congruence->first)}, {"modulus", j_int(d.congruence->second)}};
        else
            gens["congruence"] = nullptr;
        o["generators"] = gens;
        json partners = json::array();
        for (int h : d.equal_weight_partners) partners.push_back(h);
        o["equal_weight_partners"] = partners;
        return o;
    };
    if (opts.strict) strict_descriptor_scan(phi, a, opts.max_degree);
    if (opts.coordinate >= 1) return one(opts.coordinate);
    json all = json::array();
    for (int j = 1; j <= n; ++j) all.push_back(one(j));
    return json{{"coordinates", all}};
}

json classify_report(const PhaseVector &phi, const RunOptions &opts) {
    Classification cls = classify(phi);
    if (opts.strict && cls.simplify && cls.simplify->found) {
        Int b = opts.comin_bound ? *opts.comin_bound : cls.simplify->search_bound;
        strict_simple_check(phi, cls.simplify->simple_tuple, b);
    }
    json o;
    o["classification"] = torsion_kind_name(cls.kind);
    o["witness_tuple"] = j_tuple(cls.witness);
    if (cls.simplify) o["simplify"] = j_simplify(*cls.simplify);
    return o;
}

json simplify_report(const PhaseVector &phi, const RunOptions &opts) {
    ToricAnalysis a = toric_analysis(phi);
    if (!a.tuple.reduced) throw ToolError(2, "precondition", "phase vector is torsion-free");
    SimplifyResult s;
    try {
        s = simplify_search(phi, a.tuple);
    } catch (const std::invalid_argument &e) {
        throw ToolError(2, "precondition", e.what());
    }
    if (opts.strict && s.found) {
        Int b = opts.comin_bound ? *opts.comin_bound : s.search_bound;
        strict_simple_check(phi, s.simple_tuple, b);
    }
    return j_simplify(s);
}

template <class S> json jet_table(const JetMap<S> &f, const std::function<json(const S &)> &scalar) {
    json o;
    json lam = json::array();
    for (auto &l : f.lambda) lam.push_back(scalar(l));
    o["lambda"] = lam;
    json eps = json::array();
    for (int e : f.eps) eps.push_back(e);
    o["eps"] = eps;
    json terms = json::array();
    for (int j = 0; j < f.n; ++j)
        for (auto &[q, c] : f.higher[j])
            terms.push_back(json{{"coordinate", j + 1}, {"monomial", j_mi(q)}, {"coefficient", scalar(c)}});
    o["terms"] = terms;
    return o;
}

json gq_json(const GaussianRational &c) {
    return json{{"re", rat_to_string(c.re)}, {"im", rat_to_string(c.im)}};
}

json big_json(const BigComplex &c) { return json{{"re", c.re.str()}, {"im", c.im.str()}}; }

std::map<std::string, BigComplex> numeric_symbols(const PhaseVector &phi, const RunOptions &opts) {
    std::map<std::string, BigComplex> vals;
    for (auto &name : phi.basis.names) {
        auto it = opts.symbol_values.find(name);
        try {
            vals[name] = resolve_symbol_value(name, it == opts.symbol_values.end() ? "" : it->second,
                                              opts.precision);
        } catch (const std::invalid_argument &e) {
            throw ToolError(2, "precondition", e.what());
        }
    }
    return vals;
}

json normalize_report(const std::string &germ_text, const std::optional<std::string> &phase_text,
                      const RunOptions &opts) {
    ParsedGerm g = parse_germ_or_throw(germ_text);
    std::optional<PhaseVector> phases;
    if (phase_text) phases = parse_phases_or_throw(*phase_text);

    json o;
    if (g.exact_mode()) {
        JetMap<GaussianRational> f;
        try {
            f = build_exact_jet(g);
        } catch (const std::invalid_argument &e) {
            throw ToolError(2, "precondition", e.what());
        }
        PDResult<GaussianRational> r = pd_normalize(f);
        // conjugacy residual psi o g - f o psi (must vanish identically)
        JetMap<GaussianRational> lhs = compose(r.psi, r.g);
        JetMap<GaussianRational> rhs = compose(f, r.psi);
        for (int j = 0; j < f.n; ++j) {
            Poly<GaussianRational> diff = poly_sub(lhs.full_component(j), rhs.full_component(j));
            if (!diff.empty()) throw ToolError(2, "internal_error", "nonzero exact residual");
        }
        o["mode"] = "exact";
        o["psi"] = jet_table<GaussianRational>(r.psi, gq_json);
        o["g"] = jet_table<GaussianRational>(r.g, gq_json);
        o["residual_max"] = "0";
        return o;
    }

    bool any_phase = false;
    for (auto &l : g.lambda)
        if (l.is_phase) any_phase = true;
    if (any_phase && !phases) throw ToolError(2, "precondition", "phase-linked germ requires --phases");
    JetMap<BigComplex> f;
    try {
        f = build_numeric_jet(g, phases, opts.precision);
    } catch (const std::invalid_argument &e) {
        throw ToolError(2, "precondition", e.what());
    }
    PDOptions pd;
    pd.prec = opts.precision;
    if (any_phase) {
        pd.symbol_values = numeric_symbols(*phases, opts);
    } else {
        for (auto &l : g.lambda) pd.exact_lambda.push_back(l.exact);
    }
    PDResult<BigComplex> r;
    try {
        r = pd_normalize(f, pd);
    } catch (const PrecisionError &e) {
        throw ToolError(3, "precision", e.what());
    } catch (const std::invalid_argument &e) {
        throw ToolError(2, "precondition", e.what());
    }
    // residual against the jet with the numeric eigenvalues filled in, relative
    // to the largest coefficient in the conjugacy data (psi grows with small
    // divisors and carries the attainable accuracy with it)
    JetMap<BigComplex> fn = f;
    fn.lambda = r.g.lambda;
    JetMap<BigComplex> lhs = compose(r.psi, r.g);
    JetMap<BigComplex> rhs = compose(fn, r.psi);
    BigFloat residual(opts.precision), scale = BigFloat::from_long(1, opts.precision);
    for (int j = 0; j < f.n; ++j) {
        for (const Poly<BigComplex> *p : {&fn.higher[j], &r.psi.higher[j], &r.g.higher[j]})
            for (auto &[q, c] : *p) {
                BigFloat m = c.abs();
                if (m > scale) scale = m;
            }
        Poly<BigComplex> diff = poly_sub(lhs.full_component(j), rhs.full_component(j));
        for (auto &[q, c] : diff) {
            BigFloat m = c.abs();
            if (m > residual) residual = m;
        }
    }
    o["mode"] = "numeric";
    o["precision"] = (int64_t)opts.precision;
    o["psi"] = jet_table<BigComplex>(r.psi, big_json);
    o["g"] = jet_table<BigComplex>(r.g, big_json);
    o["residual_max"] = (residual / scale).str();
    return o;
}

json flow_report(const std::string &field_text, const RunOptions &opts) {
    ParsedGerm g = parse_germ_or_throw(field_text);
    json o;
    o["time"] = opts.time;
    auto t_rat = parse_rational(opts.time);
    if (g.exact_mode() && t_rat) {
        JetField<GaussianRational> x;
        try {
            x = build_exact_field(g);
        } catch (const std::invalid_argument &e) {
            throw ToolError(2, "precondition", e.what());
        }
        bool dia_zero = true;
        for (auto &d : x.dia)
            if (!d.is_zero()) dia_zero = false;
        if (dia_zero) {
            x.normal_form_flag = false;
            JetMap<GaussianRational> f = flow(x, GaussianRational{*t_rat, Rat(0)});
            o["mode"] = "exact";
            o["map"] = jet_table<GaussianRational>(f, gq_json);
            return o;
        }
    }
    JetField<BigComplex> x;
    try {
        x = build_numeric_field(g, std::nullopt, opts.precision);
    } catch (const std::invalid_argument &e) {
        throw ToolError(2, "precondition", e.what());
    }
    BigComplex t(opts.precision);
    if (t_rat)
        t = BigComplex{BigFloat::from_rat(*t_rat, opts.precision), BigFloat(opts.precision)};
    else {
        try {
            t = BigComplex{BigFloat::from_string(opts.time, opts.precision), BigFloat(opts.precision)};
        } catch (...) {
            throw ToolError(2, "precondition", "bad --time value");
        }
    }
    JetMap<BigComplex> f = flow(x, t);
    o["mode"] = "numeric";
    o["precision"] = (int64_t)opts.precision;
    o["map"] = jet_table<BigComplex>(f, big_json);
    return o;
}

IntMat parse_theta(const std::string &spec, int n) {
    if (spec.empty()) throw ToolError(2, "precondition", "check-commute requires --theta");
    std::vector<IntVec> cols;
    std::stringstream ss(spec);
    std::string col;
    while (std::getline(ss, col, ';')) {
        IntVec v;
        std::stringstream cs(col);
        std::string entry;
        while (std::getline(cs, entry, ',')) {
            auto r = parse_rational(entry);
            if (!r || !is_integer(*r)) throw ToolError(2, "precondition", "bad --theta entry '" + entry + "'");
            v.push_back(num(*r));
        }
        if ((int)v.size() != n) throw ToolError(2, "precondition", "--theta columns must have length n");
        cols.push_back(std::move(v));
    }
    if (cols.empty()) throw ToolError(2, "precondition", "empty --theta");
    return IntMat::from_cols(cols);
}

json check_commute_report(const std::string &germ_text, const std::optional<std::string> &phase_text,
                          const RunOptions &opts) {
    ParsedGerm g = parse_germ_or_throw(germ_text);
    std::optional<PhaseVector> phases;
    if (phase_text) phases = parse_phases_or_throw(*phase_text);
    IntMat theta = parse_theta(opts.theta, g.n);

    CommutationWitness w;
    json o;
    if (g.exact_mode()) {
        JetMap<GaussianRational> f;
        try {
            f = build_exact_jet(g);
        } catch (const std::invalid_argument &e) {
            throw ToolError(2, "precondition", e.what());
        }
        w = commutation_check(f, theta);
    } else {
        JetMap<BigComplex> f;
        try {
            f = build_numeric_jet(g, phases, opts.precision);
        } catch (const std::invalid_argument &e) {
            throw ToolError(2, "precondition", e.what());
        }
        w = commutation_check(f, theta);
        if (opts.strict) {
            std::vector<Rat> x;
            for (int k = 0; k < theta.cols; ++k) x.push_back(Rat(2 * k + 1, 7 + 3 * k));
            o["spot_check_deviation"] = commutation_spot_check(f, theta, x).str();
        }
    }
    o["commutes"] = w.commutes;
    json ws = json::array();
    for (auto &[q, j] : w.offending) ws.push_back(json{{"coordinate", j}, {"monomial", j_mi(q)}});
    o["witnesses"] = ws;
    return o;
}

} // namespace

json run_command(const std::string &command, const std::string &primary,
                 const std::optional<std::string> &phases, const RunOptions &opts) {
    if (opts.precision < 64) throw ToolError(2, "precondition", "precision must be >= 64 bits");
    try {
        if (command == "analyze") return analyze_report(parse_phases_or_throw(primary), opts);
        if (command == "resonances") return resonances_report(parse_phases_or_throw(primary), opts);
        if (command == "classify") return classify_report(parse_phases_or_throw(primary), opts);
        if (command == "simplify") return simplify_report(parse_phases_or_throw(primary), opts);
        if (command == "normalize") return normalize_report(primary, phases, opts);
        if (command == "flow") return flow_report(primary, opts);
        if (command == "check-commute") return check_commute_report(primary, phases, opts);
    } catch (const ToolError &) {
        throw;
    } catch (const ParseError &e) {
        throw ToolError(1, "parse_error", e.what());
    } catch (const PrecisionError &e) {
        throw ToolError(3, "precision", e.what());
    } catch (const std::invalid_argument &e) {
        throw ToolError(2, "precondition", e.what());
    }
    throw ToolError(2, "precondition", "unknown command '" + command + "'");
}

} // namespace torictool
