#pragma once

#include "torictool/numbers.hpp"

#include <optional>
#include <vector>

namespace torictool {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat from_rows(const std::vector<IntVec> &rs) {
        if (rs.empty()) return IntMat(0, 0);
        IntMat m((int)rs.size(), (int)rs[0].size());
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }
    static IntMat from_cols(const std::vector<IntVec> &cs) {
        if (cs.empty()) return IntMat(0, 0);
        IntMat m((int)cs[0].size(), (int)cs.size());
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < m.rows; ++i) m(i, j) = cs[j][i];
        return m;
    }

    Int &operator()(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int &operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

    IntVec row(int i) const {
        IntVec r(cols);
        for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }
    IntVec col(int j) const {
        IntVec c(rows);
        for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }
    IntMat transposed() const {
        IntMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool operator==(const IntMat &o) const = default;
};

IntVec mat_vec(const IntMat &m, const IntVec &x);
IntMat mat_mul(const IntMat &m, const IntMat &n);
Int dot(const IntVec &a, const IntVec &b);
Int vec_gcd(const IntVec &v);
Int total_degree(const IntVec &v); // sum of entries (for multi-indices)

// graded-lex order on integer vectors
bool graded_lex_less(const IntVec &a, const IntVec &b);

// Column-style Hermite normal form: H = M * U with U unimodular.
// H is in column echelon form: pivot rows strictly increase column by column,
// pivots positive, entries left of a pivot in its row reduced into [0, pivot),
// zero columns collected at the right.
struct HermiteResult {
    IntMat H;
    IntMat U;
    int rank = 0;
};
HermiteResult hermite_form(const IntMat &M);

// Smith normal form: S = U * M * V with U, V unimodular and S diagonal,
// d1 | d2 | ... with nonnegative diagonal.
struct SmithResult {
    IntMat U, S, V;
    int rank = 0;
};
SmithResult smith_form(const IntMat &M);

// Z-basis of {x in Z^n : M x = 0}; columns of U over the zero columns of the HNF.
// The returned vectors are sign-normalized (first nonzero entry positive).
std::vector<IntVec> integer_kernel(const IntMat &M);

struct IntSolveResult {
    IntVec particular;
    std::vector<IntVec> kernel;
};
// Solve A x = b over Z; nullopt when no integer solution exists.
std::optional<IntSolveResult> solve_integer_linear(const IntMat &A, const IntVec &b);

// ---- exact rational elimination helpers ----

int rat_rank(std::vector<RatVec> rows);

// one solution of (rows) * x = rhs over Q; nullopt if inconsistent
std::optional<RatVec> rat_solve(const std::vector<RatVec> &rows, const RatVec &rhs);

// ---- lattices ----

// Q-linearly independent integer vectors spanning a sublattice of Z^n.
struct LatticeBasis {
    int ambient = 0;
    std::vector<IntVec> basis;
};

// Basis of the saturation (Q-span intersected with Z^n) of the given rational
// vectors; canonical (HNF of the lattice, pivot-positive columns).
std::vector<IntVec> saturation_basis(int n, const std::vector<RatVec> &spanning);

// Membership constraints carving a sublattice out of Z^n: equations E x = 0
// plus congruences <v, x> = 0 mod m. Derived from a basis via Smith form.
struct LatticeConstraints {
    IntMat equations;                       // may have 0 rows
    std::vector<std::pair<IntVec, Int>> congruences; // (v, m) with m >= 2
};
LatticeConstraints lattice_constraints(const LatticeBasis &L);

bool lattice_contains(const LatticeConstraints &C, const IntVec &x);

// Decompose c = (V-part) + z with z in Z^n and the V-part in the rational span
// of `sat` (a saturated lattice basis). Returns the rational coordinates of the
// V-part over `sat`; nullopt when c is not in QV + Z^n.
std::optional<RatVec> split_over_saturated(const std::vector<IntVec> &sat, const RatVec &c);

} // namespace torictool
