#pragma once

#include "torictool/intlinalg.hpp"

#include <optional>
#include <set>
#include <vector>

namespace torictool {

// System over N^n: equations * x = rhs, plus congruences <v,x> = c mod m.
struct DioSystem {
    int n = 0;
    IntMat equations; // k x n (k may be 0)
    IntVec rhs;       // size k
    struct Congruence {
        IntVec v;
        Int modulus; // >= 2
        Int rhs;
    };
    std::vector<Congruence> congruences;

    static DioSystem homogeneous(const IntMat &eqs) {
        DioSystem s;
        s.n = eqs.cols;
        s.equations = eqs;
        s.rhs.assign(eqs.rows, Int(0));
        return s;
    }
    bool is_homogeneous() const;
    bool satisfied_by(const IntVec &x) const;
};

// Finite certified description of the solution set in N^n:
// every solution equals one particular (or 0 for homogeneous systems) plus an
// N-combination of the generators; generators are the componentwise-minimal
// nonzero homogeneous solutions, particulars the componentwise-minimal ones.
struct AffineMonoidDescription {
    int n = 0;
    std::vector<IntVec> generators;  // graded-lex sorted
    std::vector<IntVec> particulars; // graded-lex sorted; empty for infeasible or homogeneous
};

// Completion-style solver (Contejean-Devie walk): congruences are folded in as
// auxiliary slack columns, inhomogeneous right-hand sides through a homogenizing
// column capped at 1.
AffineMonoidDescription solve_monoid(const DioSystem &sys);

// Componentwise-minimal generators of {x in N^n : eqs*x = 0, <v,x> = 0 mod m}.
AffineMonoidDescription hilbert_basis(const IntMat &equations,
                                      const std::vector<std::pair<IntVec, Int>> &congruences = {});

// Minimal N-solutions of eqs*x = rhs together with the homogeneous generators.
AffineMonoidDescription minimal_inhomogeneous(const IntMat &equations, const IntVec &rhs);

// All monoid elements with total degree <= bound (0 included), graded-lex sorted.
std::vector<IntVec> enumerate_monoid(const AffineMonoidDescription &d, const Int &bound);

// ---- support-order machinery ----

struct PaperMinimal {
    IntVec element;
    std::set<int> support;
};

struct PaperMinimals {
    std::vector<PaperMinimal> elements;
};

struct CominimalSet {
    std::vector<IntVec> elements;
    Int search_bound = 0;
    bool certified = false;
};

// A/B = red(qA - pB) with p/q = min over supp(B) of a_j/b_j.
IntVec reduce_pair(const IntVec &A, const IntVec &B);

// The support-order minimal elements of (lattice intersect N^n): for each
// inclusion-minimal achievable support, the lex-least element carrying it.
PaperMinimals paper_minimal_elements(const LatticeBasis &L);

// Nonzero elements of the monoid, of total degree <= bound, dominating no
// minimal element. The certified flag is set when the exhaustion argument
// covers every direction (see implementation).
CominimalSet cominimal_elements(const LatticeBasis &L, const PaperMinimals &minimals, const Int &bound);

// default search bound: (n+1) * delta_bound * max total degree of the minimals
Int default_cominimal_bound(const LatticeBasis &L, const PaperMinimals &minimals);

struct Decomposition {
    std::optional<int> cominimal_index;
    std::vector<Int> multiplicities; // aligned with minimals
};

// Greedy chain: subtract minimals while possible; ends at 0 or a cominimal.
Decomposition decompose(const IntVec &x, const LatticeBasis &L, const PaperMinimals &minimals,
                        const CominimalSet &cominimals);

// lcm of |det| over all maximal-rank square submatrices of the minimals matrix.
Int delta_bound(const PaperMinimals &minimals);

} // namespace torictool
