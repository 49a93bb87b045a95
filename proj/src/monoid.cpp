#include "torictool/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torictool {

bool DioSystem::is_homogeneous() const {
    for (auto &r : rhs)
        if (r != 0) return false;
    for (auto &c : congruences)
        if (c.rhs % c.modulus != 0) return false;
    return true;
}

bool DioSystem::satisfied_by(const IntVec &x) const {
    if (equations.rows > 0) {
        IntVec v = mat_vec(equations, x);
        for (int i = 0; i < equations.rows; ++i)
            if (v[i] != rhs[i]) return false;
    }
    for (auto &c : congruences)
        if ((dot(c.v, x) - c.rhs) % c.modulus != 0) return false;
    return true;
}

static bool dominates(const IntVec &a, const IntVec &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

namespace {

// Contejean-Devie walk on the homogenized system. Column layout:
// [ x_1..x_n | x0 (optional) | slack pairs per congruence ].
struct Walker {
    int n;                 // original variables
    bool has_x0;
    int ncols;
    std::vector<IntVec> colvals; // value-vector of each unit step, size = #rows
    std::vector<IntVec> minimal; // found solutions (extended space)

    bool prune_dominated(const IntVec &t) const {
        for (auto &s : minimal)
            if (dominates(t, s)) return true;
        return false;
    }

    void run() {
        struct Node {
            IntVec x;
            IntVec val;
        };
        std::map<IntVec, IntVec> frontier; // x -> value vector (dedupe)
        for (int i = 0; i < ncols; ++i) {
            IntVec x(ncols, Int(0));
            x[i] = 1;
            frontier.emplace(std::move(x), colvals[i]);
        }
        while (!frontier.empty()) {
            std::map<IntVec, IntVec> next;
            for (auto &[x, val] : frontier) {
                bool zero = true;
                for (auto &v : val)
                    if (v != 0) { zero = false; break; }
                if (zero) {
                    if (!prune_dominated(x)) minimal.push_back(x);
                    continue;
                }
                if (prune_dominated(x)) continue; // only dominated solutions are reachable from here
                for (int i = 0; i < ncols; ++i) {
                    if (has_x0 && i == n && x[n] >= 1) continue; // homogenizing column capped
                    // descent direction test: <A t, A e_i> < 0
                    Int ip = 0;
                    for (size_t r = 0; r < val.size(); ++r) ip += val[r] * colvals[i][r];
                    if (ip >= 0) continue;
                    IntVec nx = x;
                    nx[i] += 1;
                    if (next.count(nx)) continue;
                    if (prune_dominated(nx)) continue;
                    IntVec nval = val;
                    for (size_t r = 0; r < nval.size(); ++r) nval[r] += colvals[i][r];
                    next.emplace(std::move(nx), std::move(nval));
                }
            }
            frontier = std::move(next);
        }
    }
};

} // namespace

AffineMonoidDescription solve_monoid(const DioSystem &sys_in) {
    DioSystem sys = sys_in;
    for (auto &c : sys.congruences) c.rhs = ((c.rhs % c.modulus) + c.modulus) % c.modulus;
    const int n = sys.n;
    const bool homogeneous = sys.is_homogeneous();
    const int ncong = (int)sys.congruences.size();
    const int nrows = sys.equations.rows + ncong;

    Walker w;
    w.n = n;
    w.has_x0 = !homogeneous;
    w.ncols = n + (w.has_x0 ? 1 : 0) + 2 * ncong;
    w.colvals.assign(w.ncols, IntVec(nrows, Int(0)));

    auto col_of = [&](int j) -> IntVec & { return w.colvals[j]; };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < sys.equations.rows; ++i) col_of(j)[i] = sys.equations(i, j);
        for (int c = 0; c < ncong; ++c) col_of(j)[sys.equations.rows + c] = sys.congruences[c].v[j];
    }
    if (w.has_x0) {
        for (int i = 0; i < sys.equations.rows; ++i) col_of(n)[i] = -sys.rhs[i];
        for (int c = 0; c < ncong; ++c) col_of(n)[sys.equations.rows + c] = -sys.congruences[c].rhs;
    }
    int slack0 = n + (w.has_x0 ? 1 : 0);
    for (int c = 0; c < ncong; ++c) {
        col_of(slack0 + 2 * c)[sys.equations.rows + c] = -sys.congruences[c].modulus;
        col_of(slack0 + 2 * c + 1)[sys.equations.rows + c] = sys.congruences[c].modulus;
    }

    w.run();

    // project to the original variables and re-minimalize
    std::vector<IntVec> gens, parts;
    for (auto &ext : w.minimal) {
        IntVec x(ext.begin(), ext.begin() + n);
        bool is_particular = w.has_x0 && ext[n] == 1;
        bool zero = std::all_of(x.begin(), x.end(), [](const Int &v) { return v == 0; });
        if (is_particular)
            parts.push_back(std::move(x));
        else if (!zero)
            gens.push_back(std::move(x));
    }
    auto minimalize = [](std::vector<IntVec> &v) {
        std::sort(v.begin(), v.end(), graded_lex_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<IntVec> keep;
        for (auto &x : v) {
            bool dominated = false;
            for (auto &k : keep)
                if (k != x && dominates(x, k)) { dominated = true; break; }
            if (!dominated) keep.push_back(x);
        }
        v = std::move(keep);
    };
    minimalize(gens);
    minimalize(parts);

    AffineMonoidDescription d;
    d.n = n;
    d.generators = std::move(gens);
    if (homogeneous)
        d.particulars = {IntVec(n, Int(0))}; // zero always solves
    else
        d.particulars = std::move(parts);
    return d;
}

AffineMonoidDescription hilbert_basis(const IntMat &equations,
                                      const std::vector<std::pair<IntVec, Int>> &congruences) {
    DioSystem sys = DioSystem::homogeneous(equations);
    for (auto &[v, m] : congruences) {
        if (m < 2) throw std::invalid_argument("congruence modulus must be >= 2");
        sys.congruences.push_back({v, m, Int(0)});
    }
    AffineMonoidDescription d = solve_monoid(sys);
    d.particulars.clear(); // homogeneous description: generators alone
    return d;
}

AffineMonoidDescription minimal_inhomogeneous(const IntMat &equations, const IntVec &rhs) {
    DioSystem sys;
    sys.n = equations.cols;
    sys.equations = equations;
    sys.rhs = rhs;
    return solve_monoid(sys);
}

std::vector<IntVec> enumerate_monoid(const AffineMonoidDescription &d, const Int &bound) {
    std::set<IntVec> seen;
    std::vector<IntVec> stack;
    IntVec zero(d.n, Int(0));
    std::vector<IntVec> starts = d.particulars.empty() ? std::vector<IntVec>{zero} : d.particulars;
    for (auto &s : starts)
        if (total_degree(s) <= bound && seen.insert(s).second) stack.push_back(s);
    while (!stack.empty()) {
        IntVec x = stack.back();
        stack.pop_back();
        for (auto &g : d.generators) {
            IntVec y = x;
            for (int i = 0; i < d.n; ++i) y[i] += g[i];
            if (total_degree(y) > bound) continue;
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    std::vector<IntVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// ---- support-order machinery ----

IntVec reduce_pair(const IntVec &A, const IntVec &B) {
    size_t n = A.size();
    if (B.size() != n) throw std::invalid_argument("reduce_pair dimension mismatch");
    bool bzero = true;
    for (auto &b : B)
        if (b != 0) bzero = false;
    if (bzero) throw std::invalid_argument("reduce_pair: B = 0");
    // p/q = min over supp(B) of a_j/b_j, the minimum running over the entries
    // A actually carries (so incomparable supports still make progress)
    Rat best;
    bool first = true;
    for (size_t j = 0; j < n; ++j) {
        if (B[j] == 0 || A[j] == 0) continue;
        Rat r = Rat(A[j]) / Rat(B[j]);
        if (first || r < best) { best = r; first = false; }
    }
    if (first) best = 0;
    Int p = num(best), q = den(best);
    IntVec out(n);
    for (size_t j = 0; j < n; ++j) out[j] = q * A[j] - p * B[j];
    Int g = vec_gcd(out);
    if (g > 1)
        for (auto &x : out) x /= g;
    return out;
}

static std::set<int> support_of(const IntVec &v) {
    std::set<int> s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.insert((int)i);
    return s;
}

static AffineMonoidDescription lattice_monoid(const LatticeBasis &L) {
    LatticeConstraints C = lattice_constraints(L);
    std::vector<std::pair<IntVec, Int>> congs;
    for (auto &[v, m] : C.congruences) congs.push_back({v, m});
    return hilbert_basis(C.equations.rows ? C.equations : IntMat(0, L.ambient), congs);
}

PaperMinimals paper_minimal_elements(const LatticeBasis &L) {
    AffineMonoidDescription hb = lattice_monoid(L);
    // Support-order minimal elements are Hilbert generators; the achievable
    // supports are unions of generator supports, so the inclusion-minimal ones
    // occur among the generator supports themselves, and for such a support the
    // lex-least element with it is the lex-least generator carrying it.
    std::vector<std::set<int>> supports;
    for (auto &g : hb.generators) supports.push_back(support_of(g));
    PaperMinimals out;
    for (size_t i = 0; i < hb.generators.size(); ++i) {
        bool minimal_support = true;
        for (size_t j = 0; j < hb.generators.size(); ++j) {
            if (i == j) continue;
            if (std::includes(supports[i].begin(), supports[i].end(), supports[j].begin(), supports[j].end()) &&
                supports[j] != supports[i]) {
                minimal_support = false;
                break;
            }
        }
        if (!minimal_support) continue;
        // lex-least generator with this exact support
        bool best = true;
        for (size_t j = 0; j < hb.generators.size(); ++j) {
            if (j == i || supports[j] != supports[i]) continue;
            if (hb.generators[j] < hb.generators[i]) { best = false; break; }
        }
        if (best) out.elements.push_back({hb.generators[i], supports[i]});
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const PaperMinimal &a, const PaperMinimal &b) { return graded_lex_less(a.element, b.element); });
    return out;
}

CominimalSet cominimal_elements(const LatticeBasis &L, const PaperMinimals &minimals, const Int &bound) {
    if (bound < 1) throw std::invalid_argument("cominimal bound must be >= 1");
    AffineMonoidDescription hb = lattice_monoid(L);
    CominimalSet out;
    out.search_bound = bound;

    auto dominates_some_minimal = [&](const IntVec &x) {
        for (auto &m : minimals.elements)
            if (dominates(x, m.element)) return true;
        return false;
    };

    for (auto &x : enumerate_monoid(hb, bound)) {
        if (total_degree(x) == 0) continue;
        if (!dominates_some_minimal(x)) out.elements.push_back(x);
    }

    // Exhaustion: a generator whose k-fold multiple dominates a minimal element
    // bounds its multiplicity in any cominimal candidate by k-1; summing those
    // slabs bounds the degree of every cominimal element.
    Int required = 0;
    bool exhaustible = true;
    for (auto &g : hb.generators) {
        if (dominates_some_minimal(g)) continue;
        std::set<int> gs = support_of(g);
        Int k_needed = -1;
        for (auto &m : minimals.elements) {
            if (!std::includes(gs.begin(), gs.end(), m.support.begin(), m.support.end())) continue;
            Int k = 1;
            for (int j : m.support) {
                Int need = (m.element[j] + g[j] - 1) / g[j]; // ceil
                if (need > k) k = need;
            }
            if (k_needed < 0 || k < k_needed) k_needed = k;
        }
        if (k_needed < 0) {
            exhaustible = false; // no minimal fits under this direction at all
            break;
        }
        required += (k_needed - 1) * total_degree(g);
    }
    if (minimals.elements.empty() && !hb.generators.empty()) exhaustible = false;
    if (hb.generators.empty()) { exhaustible = true; required = 0; }
    out.certified = exhaustible && bound >= required;
    return out;
}

Int default_cominimal_bound(const LatticeBasis &L, const PaperMinimals &minimals) {
    if (minimals.elements.empty()) return 1;
    Int maxdeg = 1;
    for (auto &m : minimals.elements) maxdeg = std::max(maxdeg, total_degree(m.element));
    return Int(L.ambient + 1) * delta_bound(minimals) * maxdeg;
}

Decomposition decompose(const IntVec &x, const LatticeBasis &L, const PaperMinimals &minimals,
                        const CominimalSet &cominimals) {
    LatticeConstraints C = lattice_constraints(L);
    for (auto &v : x)
        if (v < 0) throw std::invalid_argument("decompose: x not in N^n");
    if (!lattice_contains(C, x)) throw std::invalid_argument("decompose: x not in the lattice");

    Decomposition d;
    d.multiplicities.assign(minimals.elements.size(), Int(0));
    IntVec rem = x;
    while (true) {
        if (std::all_of(rem.begin(), rem.end(), [](const Int &v) { return v == 0; })) return d;
        bool advanced = false;
        for (size_t i = 0; i < minimals.elements.size(); ++i) {
            if (dominates(rem, minimals.elements[i].element)) {
                for (size_t j = 0; j < rem.size(); ++j) rem[j] -= minimals.elements[i].element[j];
                d.multiplicities[i] += 1;
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        // rem dominates no minimal: cominimal by definition
        for (size_t i = 0; i < cominimals.elements.size(); ++i)
            if (cominimals.elements[i] == rem) {
                d.cominimal_index = (int)i;
                return d;
            }
        throw std::runtime_error("decompose: remainder is cominimal but outside the search bound");
    }
}

Int delta_bound(const PaperMinimals &minimals) {
    if (minimals.elements.empty()) throw std::invalid_argument("delta_bound: empty minimal set");
    std::vector<IntVec> cols;
    for (auto &m : minimals.elements) cols.push_back(m.element);
    IntMat M = IntMat::from_cols(cols);
    std::vector<RatVec> rows(M.rows, RatVec(M.cols));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) rows[i][j] = Rat(M(i, j));
    int r = rat_rank(rows);
    if (r == 0) return 1;

    // all r x r minors via subset enumeration (small sizes)
    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> cur;
    auto gen = [&](auto &&self, int start, int limit, int need, std::vector<std::vector<int>> &out) -> void {
        if (need == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= limit - need; ++i) {
            cur.push_back(i);
            self(self, i + 1, limit, need - 1, out);
            cur.pop_back();
        }
    };
    gen(gen, 0, M.rows, r, row_sets);
    gen(gen, 0, M.cols, r, col_sets);

    auto det_of = [&](const std::vector<int> &rs, const std::vector<int> &cs) {
        // Bareiss would be overkill here; exact rational Gaussian determinant
        std::vector<RatVec> a(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) a[i][j] = Rat(M(rs[i], cs[j]));
        Rat det = 1;
        for (int c = 0; c < r; ++c) {
            int p = -1;
            for (int i = c; i < r; ++i)
                if (a[i][c] != 0) { p = i; break; }
            if (p < 0) return Int(0);
            if (p != c) { std::swap(a[p], a[c]); det = -det; }
            det *= a[c][c];
            for (int i = c + 1; i < r; ++i) {
                if (a[i][c] == 0) continue;
                Rat f = a[i][c] / a[c][c];
                for (int j = c; j < r; ++j) a[i][j] -= f * a[c][j];
            }
        }
        return num(det); // determinant of an integer matrix
    };

    Int l = 1;
    for (auto &rs : row_sets)
        for (auto &cs : col_sets) {
            Int dd = det_of(rs, cs);
            if (dd != 0) l = lcm(l, abs(dd));
        }
    return l;
}

} // namespace torictool
