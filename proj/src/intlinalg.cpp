#include "torictool/intlinalg.hpp"

#include <algorithm>
#include <cassert>

namespace torictool {

IntVec mat_vec(const IntMat &m, const IntVec &x) {
    if ((int)x.size() != m.cols) throw std::invalid_argument("mat_vec dimension mismatch");
    IntVec r(m.rows, Int(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * x[j];
    return r;
}

IntMat mat_mul(const IntMat &m, const IntMat &n) {
    if (m.cols != n.rows) throw std::invalid_argument("mat_mul dimension mismatch");
    IntMat r(m.rows, n.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int k = 0; k < m.cols; ++k) {
            if (m(i, k) == 0) continue;
            for (int j = 0; j < n.cols; ++j) r(i, j) += m(i, k) * n(k, j);
        }
    return r;
}

Int dot(const IntVec &a, const IntVec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int vec_gcd(const IntVec &v) {
    Int g = 0;
    for (auto &x : v) g = gcd(g, x);
    return g;
}

Int total_degree(const IntVec &v) {
    Int s = 0;
    for (auto &x : v) s += x;
    return s;
}

bool graded_lex_less(const IntVec &a, const IntVec &b) {
    Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Row-style HNF on A (in place), tracking row ops in U (U*A_in = A_out).
// Pivots positive, entries above a pivot reduced into [0, pivot).
static int row_hnf(IntMat &A, IntMat &U) {
    int m = A.rows, n = A.cols;
    auto swap_rows = [&](IntMat &M, int i, int j) {
        for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
    };
    auto addmul_row = [&](IntMat &M, int dst, int src, const Int &q) {
        for (int c = 0; c < M.cols; ++c) M(dst, c) += q * M(src, c);
    };
    auto neg_row = [&](IntMat &M, int i) {
        for (int c = 0; c < M.cols; ++c) M(i, c) = -M(i, c);
    };

    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // Euclid among rows r..m-1 in this column
        while (true) {
            int p = -1;
            for (int i = r; i < m; ++i) {
                if (A(i, col) == 0) continue;
                if (p < 0 || abs(A(i, col)) < abs(A(p, col))) p = i;
            }
            if (p < 0) break;
            if (p != r) { swap_rows(A, p, r); swap_rows(U, p, r); }
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (A(i, col) == 0) continue;
                Int q = -floor_div(A(i, col), A(r, col));
                addmul_row(A, i, r, q);
                addmul_row(U, i, r, q);
                if (A(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (A(r, col) == 0) continue;
        if (A(r, col) < 0) { neg_row(A, r); neg_row(U, r); }
        for (int i = 0; i < r; ++i) {
            Int q = -floor_div(A(i, col), A(r, col));
            if (q != 0) { addmul_row(A, i, r, q); addmul_row(U, i, r, q); }
        }
        ++r;
    }
    return r;
}

HermiteResult hermite_form(const IntMat &M) {
    IntMat At = M.transposed();
    IntMat U = IntMat::identity(At.rows);
    int rank = row_hnf(At, U);
    HermiteResult res;
    res.H = At.transposed();
    res.U = U.transposed();
    res.rank = rank;
    return res;
}

SmithResult smith_form(const IntMat &M) {
    SmithResult res;
    res.S = M;
    res.U = IntMat::identity(M.rows);
    res.V = IntMat::identity(M.cols);
    IntMat &S = res.S;
    IntMat &U = res.U;
    IntMat &V = res.V;
    int m = S.rows, n = S.cols;

    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(S(i, c), S(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(S(r, i), S(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
    };
    auto addmul_row = [&](int dst, int src, const Int &q) {
        for (int c = 0; c < n; ++c) S(dst, c) += q * S(src, c);
        for (int c = 0; c < U.cols; ++c) U(dst, c) += q * U(src, c);
    };
    auto addmul_col = [&](int dst, int src, const Int &q) {
        for (int r = 0; r < m; ++r) S(r, dst) += q * S(r, src);
        for (int r = 0; r < V.rows; ++r) V(r, dst) += q * V(r, src);
    };

    int t = 0;
    while (t < m && t < n) {
        // locate a nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (S(i, j) != 0 && (pi < 0 || abs(S(i, j)) < abs(S(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        swap_rows(pi, t);
        swap_cols(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i)
                if (S(i, t) != 0) {
                    Int q = -floor_div(S(i, t), S(t, t));
                    addmul_row(i, t, q);
                    if (S(i, t) != 0) { swap_rows(i, t); clean = false; }
                }
            for (int j = t + 1; j < n; ++j)
                if (S(t, j) != 0) {
                    Int q = -floor_div(S(t, j), S(t, t));
                    addmul_col(j, t, q);
                    if (S(t, j) != 0) { swap_cols(j, t); clean = false; }
                }
        }
        ++t;
    }
    // positive diagonal, then enforce divisibility chain
    for (int i = 0; i < t; ++i)
        if (S(i, i) < 0) {
            for (int c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
            S(i, i) = -S(i, i);
        }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            if (S(i + 1, i + 1) % S(i, i) == 0) continue;
            changed = true;
            // fold d_{i+1} into position i via one col add then re-clean the 2x2 block
            addmul_col(i, i + 1, Int(1));
            bool clean = false;
            while (!clean) {
                clean = true;
                if (S(i + 1, i) != 0) {
                    Int q = -floor_div(S(i + 1, i), S(i, i));
                    addmul_row(i + 1, i, q);
                    if (S(i + 1, i) != 0) { swap_rows(i + 1, i); clean = false; }
                }
                if (S(i, i + 1) != 0) {
                    Int q = -floor_div(S(i, i + 1), S(i, i));
                    addmul_col(i + 1, i, q);
                    if (S(i, i + 1) != 0) { swap_cols(i + 1, i); clean = false; }
                }
            }
            if (S(i, i) < 0) {
                for (int c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
                S(i, i) = -S(i, i);
            }
            if (S(i + 1, i + 1) < 0) {
                for (int c = 0; c < U.cols; ++c) U(i + 1, c) = -U(i + 1, c);
                S(i + 1, i + 1) = -S(i + 1, i + 1);
            }
        }
    }
    res.rank = t;
    return res;
}

static void sign_normalize(IntVec &v) {
    for (auto &x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto &y : v) y = -y;
        break;
    }
}

std::vector<IntVec> integer_kernel(const IntMat &M) {
    HermiteResult h = hermite_form(M);
    std::vector<IntVec> out;
    for (int j = h.rank; j < M.cols; ++j) {
        IntVec v = h.U.col(j);
        sign_normalize(v);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<IntSolveResult> solve_integer_linear(const IntMat &A, const IntVec &b) {
    if ((int)b.size() != A.rows) throw std::invalid_argument("solve dimension mismatch");
    HermiteResult h = hermite_form(A);
    IntVec residual = b;
    IntVec y(A.cols, Int(0));
    for (int j = 0; j < h.rank; ++j) {
        int p = 0;
        while (p < A.rows && h.H(p, j) == 0) ++p;
        assert(p < A.rows);
        if (residual[p] % h.H(p, j) != 0) return std::nullopt;
        y[j] = residual[p] / h.H(p, j);
        if (y[j] != 0)
            for (int i = 0; i < A.rows; ++i) residual[i] -= y[j] * h.H(i, j);
    }
    for (auto &r : residual)
        if (r != 0) return std::nullopt;
    IntSolveResult res;
    res.particular = mat_vec(h.U, y);
    res.kernel = integer_kernel(A);
    return res;
}

// ---- rational elimination ----

int rat_rank(std::vector<RatVec> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    int r = 0;
    for (size_t col = 0; col < n && r < (int)rows.size(); ++col) {
        int p = -1;
        for (int i = r; i < (int)rows.size(); ++i)
            if (rows[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<RatVec> rat_solve(const std::vector<RatVec> &rows_in, const RatVec &rhs_in) {
    std::vector<RatVec> rows = rows_in;
    size_t m = rows.size();
    size_t n = m ? rows[0].size() : 0;
    for (size_t i = 0; i < m; ++i) rows[i].push_back(rhs_in[i]);
    std::vector<int> pivot_col;
    int r = 0;
    for (size_t col = 0; col < n && r < (int)m; ++col) {
        int p = -1;
        for (int i = r; i < (int)m; ++i)
            if (rows[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < (int)m; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back((int)col);
        ++r;
    }
    for (int i = r; i < (int)m; ++i)
        if (rows[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = rows[i][n] / rows[i][pivot_col[i]];
    return x;
}

// ---- lattices ----

std::vector<IntVec> saturation_basis(int n, const std::vector<RatVec> &spanning) {
    // scale to integer columns
    std::vector<IntVec> cols;
    for (auto &v : spanning) {
        Int d = 1;
        for (auto &q : v) d = lcm(d, den(q));
        IntVec w(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            Rat s = v[i] * Rat(d);
            w[i] = num(s);
            if (w[i] != 0) zero = false;
        }
        if (!zero) cols.push_back(std::move(w));
    }
    if (cols.empty()) return {};
    // orthogonal lattice, then its kernel = saturation of the span
    IntMat A = IntMat::from_cols(cols);
    std::vector<IntVec> ortho = integer_kernel(A.transposed());
    std::vector<IntVec> sat;
    if (ortho.empty()) {
        for (int i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            sat.push_back(std::move(e));
        }
    } else {
        sat = integer_kernel(IntMat::from_rows(ortho));
    }
    // canonicalize: HNF of the basis matrix, columns sign-normalized by pivot
    if (!sat.empty()) {
        HermiteResult h = hermite_form(IntMat::from_cols(sat));
        sat.clear();
        for (int j = 0; j < h.rank; ++j) sat.push_back(h.H.col(j));
    }
    return sat;
}

LatticeConstraints lattice_constraints(const LatticeBasis &L) {
    LatticeConstraints C;
    int n = L.ambient;
    if (L.basis.empty()) {
        C.equations = IntMat::identity(n);
        return C;
    }
    IntMat B = IntMat::from_cols(L.basis);
    SmithResult s = smith_form(B); // S = U B V
    int t = s.rank;
    // x in lattice  <=>  (U x)_i = 0 mod d_i for i < t and (U x)_i = 0 for i >= t
    std::vector<IntVec> eq_rows;
    for (int i = 0; i < n; ++i) {
        IntVec row = s.U.row(i);
        if (i >= t) {
            eq_rows.push_back(row);
        } else if (s.S(i, i) != 1) {
            C.congruences.push_back({row, s.S(i, i)});
        }
    }
    C.equations = eq_rows.empty() ? IntMat(0, n) : IntMat::from_rows(eq_rows);
    return C;
}

bool lattice_contains(const LatticeConstraints &C, const IntVec &x) {
    if (C.equations.rows > 0) {
        IntVec r = mat_vec(C.equations, x);
        for (auto &v : r)
            if (v != 0) return false;
    }
    for (auto &[v, m] : C.congruences)
        if (dot(v, x) % m != 0) return false;
    return true;
}

std::optional<RatVec> split_over_saturated(const std::vector<IntVec> &sat, const RatVec &c) {
    int n = (int)c.size();
    int t = (int)sat.size();
    if (t == 0) {
        for (auto &q : c)
            if (!is_integer(q)) return std::nullopt;
        return RatVec{};
    }
    // complete sat to a Z-basis of Z^n via Smith form (elementary divisors are 1
    // for a saturated lattice); columns of P = U^{-1} then form the full basis with
    // the first t spanning the lattice.
    IntMat B = IntMat::from_cols(sat);
    SmithResult s = smith_form(B); // S = U B V
    for (int i = 0; i < s.rank; ++i)
        if (s.S(i, i) != 1) throw std::logic_error("split_over_saturated: basis not saturated");
    // P = U^{-1}: solve U P = I over Z by HNF (U unimodular)
    // x = P y  <=>  y = U x; condition: y_i integral for i >= t.
    std::vector<RatVec> Urows(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Urows[i][j] = Rat(s.U(i, j));
    RatVec y(n);
    for (int i = 0; i < n; ++i) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j) acc += Urows[i][j] * c[j];
        y[i] = acc;
    }
    for (int i = t; i < n; ++i)
        if (!is_integer(y[i])) return std::nullopt;
    // V-part = sum_{i<t} y_i * (P e_i) where P e_i = B V e_i ... recover the
    // rational coordinates over the original sat columns: B V y_head = V-part,
    // so coords over sat are V * (y_head padded).
    RatVec coords(t, Rat(0));
    for (int j = 0; j < t; ++j) {
        Rat acc = 0;
        for (int i = 0; i < t; ++i) acc += Rat(s.V(j, i)) * y[i];
        coords[j] = acc;
    }
    return coords;
}

} // namespace torictool
