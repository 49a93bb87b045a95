#pragma once

#include "torictool/monoid.hpp"
#include "torictool/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torictool {

// r integer vectors with symbolic coefficients recombining to a phase vector
// mod Z^n. When reduced, the first coefficient is 1/m with m >= 2 and
// gcd(m, eta1 entries) = 1, and the remaining coefficients carry no rational
// part and are rationally independent with 1.
struct ToricTuple {
    SymbolBasis basis;
    int n = 0;
    int r = 0;
    std::vector<IntVec> vectors;
    std::vector<SymbolicScalar> coeffs;
    bool reduced = false;
    std::optional<Int> m;
};

struct ToricAnalysis {
    int degree = 0;
    ToricTuple tuple;
};

struct TorsionReport {
    Int m = 1;   // 1 on torsion-free input
    Int q = 1;   // positive generator of S
    Int tau = 1; // m / gcd(m, q)
};

enum class TorsionKind {
    TorsionFree,
    ImpureTorsion,
    PureTorsionSimplifiable,
    PureTorsionNotSimplified,
};

std::string torsion_kind_name(TorsionKind k);

struct SimplifyResult {
    bool found = false;
    IntVec H;
    ToricTuple simple_tuple;
    Int search_bound = 0;    // strict-validation enumeration bound
    bool h_system_feasible = false;
};

struct Classification {
    TorsionKind kind = TorsionKind::TorsionFree;
    ToricTuple witness;                    // tuple backing the verdict
    std::optional<SimplifyResult> simplify; // present in the pure cases
};

// Certified finite description of Res_j([phi]) (and, en route, of the
// intersection of the additive resonance sets of the tuple rows).
struct ResonanceDescriptor {
    int j = 1;
    bool torsion = false;
    std::vector<IntVec> rows;                 // eta^(2..r) in the torsion case, else all vectors
    std::optional<std::pair<IntVec, Int>> congruence; // (eta1, m)
    DioSystem system;                         // membership test for Res_j([phi])
    AffineMonoidDescription monoid;           // complete generator description
    std::vector<int> equal_weight_partners;   // h with z_h e_j a degree-one resonant monomial
};

struct VerdictReport {
    TorsionKind kind;
    int torus_dimension = 0;
    std::vector<IntVec> weight_matrix; // columns
    bool criterion_iff = true;         // false: sufficient only
    bool compatibility_required = false;
    std::optional<bool> compatible_tuple_found;
    std::optional<std::vector<IntVec>> compatible_weight_matrix;
};

// ---- operations ----

PhaseVector evaluate_tuple(const ToricTuple &t);

// structural validity: recombination to phi mod Z^n, Q-independent vectors,
// rationally independent coefficients, reduced-form conditions
void validate_tuple(const ToricTuple &t, const PhaseVector &phi);

ToricAnalysis toric_analysis(const PhaseVector &phi);

ToricTuple reduce_tuple(const ToricTuple &t, bool equal_phase_compatible = false);

TorsionReport torsion_of_reduced(const ToricTuple &t);
TorsionReport torsion(const PhaseVector &phi);

ToricTuple eliminate_rational_coefficient(const ToricTuple &t);

ResonanceDescriptor resonance_descriptor(const PhaseVector &phi, int j);
ResonanceDescriptor resonance_descriptor(const ToricAnalysis &a, int j);

bool descriptor_member(const ResonanceDescriptor &d, const IntVec &Q);

std::vector<IntVec> enumerate_resonances(const PhaseVector &phi, int j, const Int &max_degree);

Classification classify(const PhaseVector &phi);

SimplifyResult simplify_search(const PhaseVector &phi, const ToricTuple &reduced);

bool theta_resonant(const IntVec &Q, int j, const IntMat &theta);

// jordan: (eigenvalue label, block size); true iff every within-block
// subdiagonal monomial is theta-resonant, i.e. the adjacent rows coincide
bool compatible(const IntMat &theta, const std::vector<std::pair<std::string, int>> &jordan);

VerdictReport normalization_verdict(const PhaseVector &phi, bool diagonalizable);

// Can [phi] be written over the given integer vectors (with any coefficients)
// mod Z^n? Used by minimality spot-checks.
bool representable(const PhaseVector &phi, const std::vector<IntVec> &vectors);

} // namespace torictool
