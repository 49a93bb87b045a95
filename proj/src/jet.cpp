#include "torictool/jet.hpp"

#include <algorithm>
#include <cassert>

namespace torictool {

// ---- pd_normalize ----

namespace {

// expansion of z^Q under the linear Jordan action: product over h of
// (lambda_h z_h + eps_h z_{h-1})^{q_h}
template <class S>
Poly<S> jordan_monomial_expansion(const MultiIndex &Q, const std::vector<S> &lambda,
                                  const std::vector<int> &eps, long prec) {
    const int n = (int)Q.size();
    Poly<S> acc;
    acc.emplace(MultiIndex(n, 0), ScalarTraits<S>::one(prec));
    for (int h = 0; h < n; ++h) {
        if (Q[h] == 0) continue;
        Poly<S> base;
        MultiIndex eh(n, 0);
        eh[h] = 1;
        base.emplace(eh, lambda[h]);
        if (eps[h]) {
            MultiIndex em(n, 0);
            em[h - 1] = 1;
            base.emplace(em, ScalarTraits<S>::one(prec));
        }
        acc = poly_mul(acc, poly_pow(base, Q[h], n, mi_degree(Q), prec), mi_degree(Q));
    }
    return acc;
}

std::vector<MultiIndex> all_multi_indices(int n, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    auto rec = [&](auto &&self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, degree);
    return out;
}

// weight used to triangularize the homological couplings: moving a factor from
// z_h to z_{h-1} strictly lowers sum q_h * h
long coupling_weight(const MultiIndex &q) {
    long w = 0;
    for (size_t h = 0; h < q.size(); ++h) w += (long)q[h] * (long)h;
    return w;
}

template <class S>
PDResult<S> pd_normalize_impl(const JetMap<S> &f,
                              const std::function<bool(const MultiIndex &, int)> &resonant,
                              const std::function<S(const MultiIndex &, int)> &divisor) {
    const int n = f.n, D = f.D;
    const long prec = f.prec;

    PDResult<S> res;
    res.psi = JetMap<S>::identity(n, D, prec);
    res.g = JetMap<S>::identity(n, D, prec);
    res.g.lambda = f.lambda;
    res.g.eps = f.eps;
    res.g.link = f.link;
    res.psi.link = f.link;

    for (int d = 2; d <= D; ++d) {
        JetMap<S> lhs = compose(res.psi, res.g);
        JetMap<S> rhs = compose(f, res.psi);
        // K_d = [f o psi - psi o g]_d with the degree-d unknowns still zero
        std::vector<Poly<S>> K(n);
        for (int j = 0; j < n; ++j) {
            Poly<S> diff = poly_sub(rhs.full_component(j), lhs.full_component(j));
            for (auto &[q, c] : diff)
                if (mi_degree(q) == d) poly_add_term(K[j], q, c);
        }

        std::vector<MultiIndex> mis = all_multi_indices(n, d);
        std::sort(mis.begin(), mis.end(), [](const MultiIndex &a, const MultiIndex &b) {
            long wa = coupling_weight(a), wb = coupling_weight(b);
            if (wa != wb) return wa > wb;
            return a < b;
        });

        // scatter of already-solved psi entries through the Jordan expansion
        std::vector<Poly<S>> acc(n);
        std::vector<Poly<S>> psi_d(n); // degree-d psi coefficients solved so far

        for (auto &Q : mis) {
            for (int j = 0; j < n; ++j) {
                S coupling = ScalarTraits<S>::zero(prec);
                if (auto it = acc[j].find(Q); it != acc[j].end()) coupling = it->second;
                if (f.eps[j]) {
                    if (auto it = psi_d[j - 1].find(Q); it != psi_d[j - 1].end())
                        coupling = coupling - it->second;
                }
                S k = ScalarTraits<S>::zero(prec);
                if (auto it = K[j].find(Q); it != K[j].end()) k = it->second;
                S val = k - coupling;
                if (resonant(Q, j + 1)) {
                    poly_add_term(res.g.higher[j], Q, val);
                } else {
                    if (ScalarTraits<S>::is_zero(val)) continue;
                    S psi_val = val / divisor(Q, j + 1);
                    poly_add_term(psi_d[j], Q, psi_val);
                    poly_add_term(res.psi.higher[j], Q, psi_val);
                    Poly<S> expansion = jordan_monomial_expansion(Q, f.lambda, f.eps, prec);
                    for (auto &[Q2, c] : expansion) {
                        if (Q2 == Q) continue; // diagonal handled by the divisor
                        poly_add_term(acc[j], Q2, c * psi_val);
                    }
                }
            }
        }
    }
    return res;
}

} // namespace

PDResult<GaussianRational> pd_normalize(const JetMap<GaussianRational> &f) {
    auto resonant = [&](const MultiIndex &Q, int j) {
        GaussianRational p(1);
        for (int h = 0; h < f.n; ++h) p = p * pow(f.lambda[h], Int(Q[h]));
        return p == f.lambda[j - 1];
    };
    auto divisor = [&](const MultiIndex &Q, int j) {
        GaussianRational p(1);
        for (int h = 0; h < f.n; ++h) p = p * pow(f.lambda[h], Int(Q[h]));
        return p - f.lambda[j - 1];
    };
    return pd_normalize_impl<GaussianRational>(f, resonant, divisor);
}

PDResult<BigComplex> pd_normalize(const JetMap<BigComplex> &f, const PDOptions &opts) {
    const long prec = f.prec;
    if (!f.link) {
        // numeric coefficients over exact eigenvalues
        if ((int)opts.exact_lambda.size() != f.n)
            throw std::invalid_argument("pd_normalize: numeric jet needs linked phases or exact eigenvalues");
        const std::vector<GaussianRational> lam = opts.exact_lambda;
        auto resonant = [lam, n = f.n](const MultiIndex &Q, int j) {
            GaussianRational p(1);
            for (int h = 0; h < n; ++h) p = p * pow(lam[h], Int(Q[h]));
            return p == lam[j - 1];
        };
        BigFloat floor = BigFloat::pow2(-(prec / 2), prec);
        std::vector<BigComplex> lamn;
        for (auto &l : lam) lamn.push_back(BigComplex::from_gaussian(l, prec));
        auto divisor = [lamn, floor, prec, n = f.n](const MultiIndex &Q, int j) {
            BigComplex p = BigComplex::from_long(1, prec);
            for (int h = 0; h < n; ++h) p = p * pow(lamn[h], Int(Q[h]));
            BigComplex d = p - lamn[j - 1];
            if (!(d.abs() > floor))
                throw PrecisionError("homological divisor below 2^-(P/2) at a non-resonant position");
            return d;
        };
        JetMap<BigComplex> fl = f;
        fl.lambda = lamn;
        return pd_normalize_impl<BigComplex>(fl, resonant, divisor);
    }
    const PhaseLink &link = *f.link;

    // phase vector reindexed by jet coordinate
    std::vector<SymbolicScalar> entries(f.n);
    for (int j = 0; j < f.n; ++j) {
        int k = link.coord[j];
        if (k < 1 || k > link.phi.dim()) throw std::invalid_argument("pd_normalize: bad phase link");
        entries[j] = link.phi.entries[k - 1];
    }
    PhaseVector local(link.phi.basis, entries);

    auto resonant = [local](const MultiIndex &Q, int j) {
        IntVec q(Q.size());
        for (size_t i = 0; i < Q.size(); ++i) q[i] = Q[i];
        return is_integral_combination(local, q, j);
    };

    // numeric eigenvalues e^{2 pi i phi_j}
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    auto numeric_phase = [&](const SymbolicScalar &s) {
        BigFloat re = BigFloat::from_rat(s.rational, prec), im(prec);
        for (auto &[idx, c] : s.coeffs) {
            auto it = opts.symbol_values.find(local.basis.names[idx]);
            if (it == opts.symbol_values.end())
                throw std::invalid_argument("pd_normalize: no numeric value for symbol " +
                                            local.basis.names[idx]);
            re = re + BigFloat::from_rat(c, prec) * it->second.re;
            im = im + BigFloat::from_rat(c, prec) * it->second.im;
        }
        return BigComplex{re, im};
    };
    std::vector<BigComplex> lam;
    for (int j = 0; j < f.n; ++j) {
        BigComplex ph = numeric_phase(entries[j]);
        // e^{2 pi i (a+bi)} = e^{-2 pi b} e^{2 pi i a}
        BigComplex expo{-(two_pi * ph.im), two_pi * ph.re};
        lam.push_back(expo.exp());
    }
    BigFloat floor = BigFloat::pow2(-(prec / 2), prec);
    auto divisor = [&, lam, floor](const MultiIndex &Q, int j) {
        BigComplex p = BigComplex::from_long(1, prec);
        for (int h = 0; h < f.n; ++h) p = p * pow(lam[h], Int(Q[h]));
        BigComplex d = p - lam[j - 1];
        if (!(d.abs() > floor))
            throw PrecisionError("homological divisor below 2^-(P/2) at a non-resonant position");
        return d;
    };

    JetMap<BigComplex> fl = f;
    for (int j = 0; j < f.n; ++j)
        if (link.coord[j] >= 1) fl.lambda[j] = lam[j];
    return pd_normalize_impl<BigComplex>(fl, resonant, divisor);
}

// ---- commutation with a torus weight matrix ----

template <class S> CommutationWitness commutation_check(const JetMap<S> &f, const IntMat &theta) {
    if (theta.rows != f.n) throw std::invalid_argument("commutation_check: theta rows != n");
    CommutationWitness w;
    auto rows_equal = [&](int a, int b) {
        for (int k = 0; k < theta.cols; ++k)
            if (theta(a, k) != theta(b, k)) return false;
        return true;
    };
    auto theta_res = [&](const MultiIndex &Q, int j) {
        int deg = mi_degree(Q);
        if (deg == 1) {
            int h = 0;
            while (Q[h] == 0) ++h;
            return rows_equal(h, j);
        }
        for (int k = 0; k < theta.cols; ++k) {
            Int acc = 0;
            for (int i = 0; i < f.n; ++i) acc += Int(Q[i]) * theta(i, k);
            if (acc != theta(j, k)) return false;
        }
        return true;
    };
    for (int j = 0; j < f.n; ++j) {
        if (f.eps[j]) {
            MultiIndex em(f.n, 0);
            em[j - 1] = 1;
            if (!rows_equal(j - 1, j)) {
                w.commutes = false;
                w.offending.push_back({em, j + 1});
            }
        }
        for (auto &[Q, c] : f.higher[j]) {
            if (ScalarTraits<S>::is_zero(c)) continue;
            if (!theta_res(Q, j)) {
                w.commutes = false;
                w.offending.push_back({Q, j + 1});
            }
        }
    }
    return w;
}

template CommutationWitness commutation_check(const JetMap<GaussianRational> &, const IntMat &);
template CommutationWitness commutation_check(const JetMap<BigComplex> &, const IntMat &);

BigFloat commutation_spot_check(const JetMap<BigComplex> &f, const IntMat &theta,
                                const std::vector<Rat> &x) {
    const long prec = f.prec;
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    auto character = [&](const Rat &arg) {
        BigFloat a = two_pi * BigFloat::from_rat(arg, prec);
        return BigComplex{a.cos(), a.sin()};
    };
    BigFloat dev(prec);
    for (int j = 0; j < f.n; ++j) {
        Rat arg_j = 0;
        for (int k = 0; k < theta.cols; ++k) arg_j += x[k] * Rat(theta(j, k));
        for (auto &[Q, c] : f.higher[j]) {
            Rat arg_q = 0;
            for (int k = 0; k < theta.cols; ++k) {
                Int acc = 0;
                for (int i = 0; i < f.n; ++i) acc += Int(Q[i]) * theta(i, k);
                arg_q += x[k] * Rat(acc);
            }
            BigFloat mag = (c * (character(arg_q) - character(arg_j))).abs();
            if (mag > dev) dev = mag;
        }
        if (f.eps[j]) {
            Rat arg_m = 0;
            for (int k = 0; k < theta.cols; ++k) arg_m += x[k] * Rat(theta(j - 1, k));
            BigFloat mag = (character(arg_m) - character(arg_j)).abs();
            if (mag > dev) dev = mag;
        }
    }
    return dev;
}

// ---- flows ----

namespace {

template <class S> std::vector<Poly<S>> field_components(const JetField<S> &x) {
    std::vector<Poly<S>> c(x.n);
    for (int j = 0; j < x.n; ++j) c[j] = x.full_component(j);
    return c;
}

template <class S>
std::vector<Poly<S>> apply_derivation(const std::vector<Poly<S>> &xc, const std::vector<Poly<S>> &p,
                                      int n, int D, long prec) {
    std::vector<Poly<S>> out(n);
    for (int j = 0; j < n; ++j) {
        Poly<S> acc;
        for (int h = 0; h < n; ++h) acc = poly_add(acc, poly_mul(xc[h], poly_partial(p[j], h, prec), D));
        out[j] = std::move(acc);
    }
    return out;
}

template <class S> std::vector<std::vector<S>> linear_matrix(const JetField<S> &x) {
    std::vector<std::vector<S>> a(x.n, std::vector<S>(x.n, ScalarTraits<S>::zero(x.prec)));
    for (int j = 0; j < x.n; ++j)
        for (int h = 0; h < x.n; ++h) {
            a[j][h] = x.nil[j][h];
            if (h == j) a[j][h] = a[j][h] + x.dia[j];
        }
    return a;
}

template <class S>
std::vector<std::vector<S>> mat_mul_s(const std::vector<std::vector<S>> &a,
                                      const std::vector<std::vector<S>> &b, long prec) {
    int n = (int)a.size();
    std::vector<std::vector<S>> r(n, std::vector<S>(n, ScalarTraits<S>::zero(prec)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (ScalarTraits<S>::is_zero(a[i][k])) continue;
            for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

template <class S> bool mat_is_zero(const std::vector<std::vector<S>> &a) {
    for (auto &row : a)
        for (auto &v : row)
            if (!ScalarTraits<S>::is_zero(v)) return false;
    return true;
}

// exp(tA) for nilpotent A: the series terminates
template <class S>
std::optional<std::vector<std::vector<S>>> nilpotent_exp(const std::vector<std::vector<S>> &a, const S &t,
                                                         long prec) {
    int n = (int)a.size();
    std::vector<std::vector<S>> ta(n, std::vector<S>(n, ScalarTraits<S>::zero(prec)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ta[i][j] = a[i][j] * t;
    std::vector<std::vector<S>> pw = ta;
    // check nilpotency first
    std::vector<std::vector<S>> probe = a;
    bool nilpotent = false;
    for (int k = 1; k <= n; ++k) {
        if (mat_is_zero(probe)) { nilpotent = true; break; }
        probe = mat_mul_s(probe, a, prec);
    }
    if (mat_is_zero(probe)) nilpotent = true;
    if (!nilpotent) return std::nullopt;
    std::vector<std::vector<S>> r(n, std::vector<S>(n, ScalarTraits<S>::zero(prec)));
    for (int i = 0; i < n; ++i) r[i][i] = ScalarTraits<S>::one(prec);
    S fact = ScalarTraits<S>::one(prec);
    for (int k = 1; k <= n; ++k) {
        fact = fact * ScalarTraits<S>::from_int(k, prec);
        bool zero = mat_is_zero(pw);
        if (zero) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + pw[i][j] / fact;
        pw = mat_mul_s(pw, ta, prec);
    }
    return r;
}

template <class S> JetMap<S> map_from_components(std::vector<Poly<S>> comps, int n, int D, long prec) {
    JetMap<S> f;
    f.n = n;
    f.D = D;
    f.prec = prec;
    f.lambda.assign(n, ScalarTraits<S>::zero(prec));
    f.eps.assign(n, 0);
    f.higher.assign(n, {});
    for (int j = 0; j < n; ++j) {
        for (auto &[q, c] : comps[j]) {
            if (mi_degree(q) == 1) {
                int h = 0;
                while (q[h] == 0) ++h;
                if (h == j) {
                    f.lambda[j] = c;
                    continue;
                }
            }
            poly_add_term(f.higher[j], q, c);
        }
    }
    return f;
}

template <class S> JetMap<S> linear_map(const std::vector<std::vector<S>> &a, int D, long prec) {
    int n = (int)a.size();
    std::vector<Poly<S>> comps(n);
    for (int j = 0; j < n; ++j)
        for (int h = 0; h < n; ++h) {
            MultiIndex eh(n, 0);
            eh[h] = 1;
            poly_add_term(comps[j], eh, a[j][h]);
        }
    return map_from_components(std::move(comps), n, D, prec);
}

// exp(t Y) for a field of order >= 2: the Lie series terminates at jet level
template <class S> JetMap<S> exp_higher_part(const JetField<S> &x, const S &t) {
    const int n = x.n, D = x.D;
    const long prec = x.prec;
    std::vector<Poly<S>> yc(n);
    for (int j = 0; j < n; ++j) yc[j] = x.higher[j];
    std::vector<Poly<S>> acc(n), term(n);
    for (int j = 0; j < n; ++j) {
        MultiIndex ej(n, 0);
        ej[j] = 1;
        acc[j].emplace(ej, ScalarTraits<S>::one(prec));
        term[j] = acc[j];
    }
    S tk = ScalarTraits<S>::one(prec);
    S fact = ScalarTraits<S>::one(prec);
    for (int k = 1; k <= D + 1; ++k) {
        term = apply_derivation(yc, term, n, D, prec);
        bool zero = true;
        for (auto &p : term)
            if (!p.empty()) zero = false;
        if (zero) break;
        tk = tk * t;
        fact = fact * ScalarTraits<S>::from_int(k, prec);
        S coef = tk / fact;
        for (int j = 0; j < n; ++j) acc[j] = poly_add(acc[j], poly_scale(term[j], coef));
    }
    return map_from_components(std::move(acc), n, D, prec);
}

JetMap<BigComplex> lie_series_flow(const JetField<BigComplex> &x, const BigComplex &t) {
    const int n = x.n, D = x.D;
    const long prec = x.prec;
    std::vector<Poly<BigComplex>> xc = field_components(x);
    BigFloat norm(prec);
    for (auto &p : xc)
        for (auto &[q, c] : p) {
            BigFloat m = c.abs();
            if (m > norm) norm = m;
        }
    norm = norm * t.abs();
    // scale time until the series is strongly contractive, then square back
    int s = 0;
    BigFloat quarter = BigFloat::pow2(-10, prec);
    BigFloat half = BigFloat::from_rat(Rat(1, 2), prec);
    BigComplex tau = t;
    while (norm > quarter && s < 2048) {
        tau = BigComplex{tau.re * half, tau.im * half};
        norm = norm * half;
        ++s;
    }
    std::vector<Poly<BigComplex>> acc(n), term(n);
    for (int j = 0; j < n; ++j) {
        MultiIndex ej(n, 0);
        ej[j] = 1;
        acc[j].emplace(ej, BigComplex::from_long(1, prec));
        term[j] = acc[j];
    }
    BigComplex tk = BigComplex::from_long(1, prec);
    BigComplex fact = BigComplex::from_long(1, prec);
    BigFloat tiny = BigFloat::pow2(-(prec + 64), prec);
    int quiet = 0;
    for (int k = 1; k <= 400 && quiet < 4; ++k) {
        term = apply_derivation(xc, term, n, D, prec);
        tk = tk * tau;
        fact = fact * BigComplex::from_long(k, prec);
        BigComplex coef = tk / fact;
        BigFloat tmax(prec);
        for (int j = 0; j < n; ++j) {
            Poly<BigComplex> scaled = poly_scale(term[j], coef);
            for (auto &[q, c] : scaled) {
                BigFloat m = c.abs();
                if (m > tmax) tmax = m;
            }
            acc[j] = poly_add(acc[j], scaled);
        }
        if (tmax > tiny)
            quiet = 0;
        else
            ++quiet;
    }
    JetMap<BigComplex> phi = map_from_components(std::move(acc), n, D, prec);
    for (int k = 0; k < s; ++k) phi = compose(phi, phi);
    return phi;
}

} // namespace

template <class S> JetMap<S> flow(const JetField<S> &x, const S &t) {
    const int n = x.n, D = x.D;
    const long prec = x.prec;
    auto a = linear_matrix(x);

    if (x.normal_form_flag) {
        // exp(t(L+Y)) = exp(tL) o exp(tY) for the commuting split
        JetMap<S> high = exp_higher_part(x, t);
        std::vector<std::vector<S>> dia_exp(n, std::vector<S>(n, ScalarTraits<S>::zero(prec)));
        bool dia_zero = true;
        for (int j = 0; j < n; ++j)
            if (!ScalarTraits<S>::is_zero(x.dia[j])) dia_zero = false;
        std::vector<std::vector<S>> nil = x.nil;
        auto nexp = nilpotent_exp(nil, t, prec);
        if (!nexp) throw std::invalid_argument("flow: non-nilpotent remainder in the linear part");
        if (dia_zero) {
            return compose(linear_map(*nexp, D, prec), high);
        }
        if constexpr (ScalarTraits<S>::exact) {
            throw std::invalid_argument("flow: nonzero diagonal requires the numeric mode");
        } else {
            for (int j = 0; j < n; ++j) {
                BigComplex e = (x.dia[j] * t).exp();
                for (int h = 0; h < n; ++h) dia_exp[j][h] = (h == j) ? e : BigComplex(prec);
            }
            auto lin = mat_mul_s(dia_exp, *nexp, prec);
            return compose(linear_map(lin, D, prec), high);
        }
    }

    // general path: scaled Lie series (numeric), or the terminating series when
    // the whole linear part is nilpotent and the scalars exact
    if constexpr (ScalarTraits<S>::exact) {
        if (nilpotent_exp(a, t, prec)) {
            // derivation is locally nilpotent on each jet degree; iterate to fixpoint
            std::vector<Poly<S>> xc = field_components(x);
            std::vector<Poly<S>> acc(n), term(n);
            for (int j = 0; j < n; ++j) {
                MultiIndex ej(n, 0);
                ej[j] = 1;
                acc[j].emplace(ej, ScalarTraits<S>::one(prec));
                term[j] = acc[j];
            }
            S tk = ScalarTraits<S>::one(prec);
            S fact = ScalarTraits<S>::one(prec);
            int cap = (D + 2) * (n + 2) * (D + 2);
            for (int k = 1; k <= cap; ++k) {
                term = apply_derivation(xc, term, n, D, prec);
                bool zero = true;
                for (auto &p : term)
                    if (!p.empty()) zero = false;
                if (zero) break;
                if (k == cap) throw std::logic_error("flow: exact Lie series did not terminate");
                tk = tk * t;
                fact = fact * ScalarTraits<S>::from_int(k, prec);
                S coef = tk / fact;
                for (int j = 0; j < n; ++j) acc[j] = poly_add(acc[j], poly_scale(term[j], coef));
            }
            return map_from_components(std::move(acc), n, D, prec);
        }
        throw std::invalid_argument("flow: exact mode needs a nilpotent linear part or the normal-form split");
    } else {
        return lie_series_flow(x, t);
    }
}

template JetMap<GaussianRational> flow(const JetField<GaussianRational> &, const GaussianRational &);
template JetMap<BigComplex> flow(const JetField<BigComplex> &, const BigComplex &);

// ---- normal form flow check ----

FieldCheckResult flow_normal_form_check(const JetField<BigComplex> &x) {
    const int n = x.n;
    const long prec = x.prec;
    FieldCheckResult res;
    BigFloat tol = BigFloat::pow2(-(prec - 10), prec);

    JetField<BigComplex> dia_only = JetField<BigComplex>::zero(n, x.D, prec);
    dia_only.dia = x.dia;
    dia_only.normal_form_flag = true;
    JetField<BigComplex> rest = x;
    for (int j = 0; j < n; ++j) rest.dia[j] = BigComplex(prec);
    rest.normal_form_flag = false;

    JetField<BigComplex> br = lie_bracket(dia_only, rest);
    for (int j = 0; j < n; ++j) {
        for (int h = 0; h < n; ++h) {
            BigComplex c = br.nil[j][h];
            if (h == j) c = c + br.dia[j];
            if (c.abs() > tol) {
                res.ok = false;
                res.reason = "linear parts do not commute";
                MultiIndex eh(n, 0);
                eh[h] = 1;
                res.witness = {eh, j + 1};
                return res;
            }
        }
        for (auto &[q, c] : br.higher[j])
            if (c.abs() > tol) {
                res.ok = false;
                res.reason = "[X^dia, X^nil + X^res] != 0";
                res.witness = {q, j + 1};
                return res;
            }
    }

    JetField<BigComplex> verified = x;
    verified.normal_form_flag = true;
    BigComplex one = BigComplex::from_long(1, prec);
    JetMap<BigComplex> F = flow(verified, one);
    JetMap<BigComplex> G = flow(dia_only, one);

    // linear part: diagonal exp(phi_j), strictly upper part vanishing
    for (int j = 0; j < n; ++j) {
        BigComplex expected = x.dia[j].exp();
        if ((F.lambda[j] - expected).abs() > tol) {
            res.ok = false;
            res.reason = "flow diagonal differs from exp(phi_j)";
            MultiIndex ej(n, 0);
            ej[j] = 1;
            res.witness = {ej, j + 1};
            return res;
        }
        for (auto &[q, c] : F.higher[j]) {
            if (mi_degree(q) != 1) continue;
            int h = 0;
            while (q[h] == 0) ++h;
            if (h > j && c.abs() > tol) {
                res.ok = false;
                res.reason = "flow linear part not triangular";
                res.witness = {q, j + 1};
                return res;
            }
        }
    }

    JetMap<BigComplex> fg = compose(F, G);
    JetMap<BigComplex> gf = compose(G, F);
    for (int j = 0; j < n; ++j) {
        Poly<BigComplex> diff = poly_sub(fg.full_component(j), gf.full_component(j));
        for (auto &[q, c] : diff)
            if (c.abs() > tol) {
                res.ok = false;
                res.reason = "flow does not commute with the diagonal flow";
                res.witness = {q, j + 1};
                return res;
            }
    }
    return res;
}

// ---- commutation with a vector field: d f (X) = X o f ----

namespace {

template <class S>
FieldCommuteResult<S> commutes_impl(const JetMap<S> &f, const JetField<S> &x,
                                    const std::function<bool(const S &)> &negligible) {
    const int n = f.n, D = f.D;
    const long prec = f.prec;
    std::vector<Poly<S>> fc(n), xc = field_components(x);
    for (int j = 0; j < n; ++j) fc[j] = f.full_component(j);
    FieldCommuteResult<S> res;
    for (int j = 0; j < n; ++j) {
        Poly<S> lhs;
        for (int h = 0; h < n; ++h) lhs = poly_add(lhs, poly_mul(poly_partial(fc[j], h, prec), xc[h], D));
        Poly<S> rhs = poly_subst(xc[j], fc, n, D, prec);
        Poly<S> diff = poly_sub(lhs, rhs);
        for (auto &[q, c] : diff)
            if (!negligible(c)) {
                res.commutes = false;
                res.witness = {q, j + 1};
                return res;
            }
    }
    return res;
}

} // namespace

FieldCommuteResult<GaussianRational> commutes_with_field(const JetMap<GaussianRational> &f,
                                                         const JetField<GaussianRational> &x) {
    return commutes_impl<GaussianRational>(f, x, [](const GaussianRational &c) { return c.is_zero(); });
}

FieldCommuteResult<BigComplex> commutes_with_field(const JetMap<BigComplex> &f,
                                                   const JetField<BigComplex> &x, long tol_bits) {
    BigFloat tol = BigFloat::pow2(-tol_bits, f.prec);
    return commutes_impl<BigComplex>(f, x, [tol](const BigComplex &c) { return !(c.abs() > tol); });
}

// ---- additive toric data of a diagonal field ----

VfToricResult vf_toric_degree(const std::vector<SymbolicScalar> &dia, const SymbolBasis &basis) {
    const int n = (int)dia.size();
    if (n == 0) throw std::invalid_argument("vf_toric_degree: empty diagonal");
    std::vector<RatVec> spanning;
    RatVec c(n);
    bool czero = true;
    for (int j = 0; j < n; ++j) {
        c[j] = dia[j].rational;
        if (c[j] != 0) czero = false;
    }
    if (!czero) spanning.push_back(c);
    for (int s = 0; s < (int)basis.size(); ++s) {
        RatVec v(n, Rat(0));
        bool nz = false;
        for (int j = 0; j < n; ++j) {
            v[j] = dia[j].coeff(s);
            if (v[j] != 0) nz = true;
        }
        if (nz) spanning.push_back(std::move(v));
    }
    std::vector<IntVec> sat = saturation_basis(n, spanning);
    VfToricResult res;
    res.r = (int)sat.size();
    res.vectors = sat;
    res.coeffs.assign(res.r, SymbolicScalar{});
    if (res.r == 0) return res;
    std::vector<RatVec> rows(n, RatVec(res.r));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < res.r; ++k) rows[i][k] = Rat(sat[k][i]);
    if (!czero) {
        auto sol = rat_solve(rows, c);
        if (!sol) throw std::logic_error("vf_toric_degree: rational part outside its span");
        for (int k = 0; k < res.r; ++k) res.coeffs[k].rational = (*sol)[k];
    }
    for (int s = 0; s < (int)basis.size(); ++s) {
        RatVec v(n, Rat(0));
        bool nz = false;
        for (int j = 0; j < n; ++j) {
            v[j] = dia[j].coeff(s);
            if (v[j] != 0) nz = true;
        }
        if (!nz) continue;
        auto sol = rat_solve(rows, v);
        if (!sol) throw std::logic_error("vf_toric_degree: symbol vector outside its span");
        for (int k = 0; k < res.r; ++k)
            if ((*sol)[k] != 0) res.coeffs[k].add_term(s, (*sol)[k]);
    }
    return res;
}

} // namespace torictool
