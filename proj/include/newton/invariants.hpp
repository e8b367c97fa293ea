#pragma once

#include <map>
#include <string>
#include <vector>

#include "newton/motives.hpp"
#include "newton/newton_algo.hpp"

namespace newton {

struct LocalMotiveResult {
    MotiveExpr motive;
    long chi = 0;
    int tree_node_id = -1;
};

// The motivic Milnor fiber (S_{f^eps, x != 0})_{((0,0),0)} of f = x^{-M} g via the
// Newton algorithm, together with its Euler realization.  chi is additionally
// recomputed through the area formulas; disagreement raises consistency_error.
LocalMotiveResult local_motive(const LaurentPoly& f, Sign eps);

// chi-only evaluation of the same motive through the Kouchnirenko-type recursion.
long local_chi(const LaurentPoly& f, Sign eps);

struct MotiveWithChi {
    MotiveExpr motive;
    long chi = 0;
    std::vector<long> chi_terms;  // per-term decomposition in assembly order
};

// S_{f,infinity} and chi_c of the generic fiber.
MotiveWithChi milnor_fiber_at_infinity(const LaurentPoly& f);

// S_{f,a}^infinity and its chi (computed on f - a).
MotiveWithChi nearby_cycles_at_infinity(const LaurentPoly& f, const AlgebraicScalar& a);

// lambda_a = -chi(S_{f,a}^infinity), cross-checked against the direct area formula;
// disagreement raises consistency_error.
long lambda_invariant(const LaurentPoly& f, const AlgebraicScalar& a);

// Exact critical values of f via resultant elimination of the Jacobian ideal.
std::vector<AlgebraicScalar> critical_values(const LaurentPoly& f);

struct CandidateReport {
    ValueOrbit orbit;
    long lambda = 0;
    MotiveWithChi nearby;  // S_{f,a}^infinity for a representative root
};

struct BifurcationReport {
    std::vector<CandidateReport> candidates;     // B^Newton with lambda per orbit
    std::vector<ValueOrbit> b_newton;
    std::vector<ValueOrbit> b_top;               // disc(f) ∪ {lambda != 0}
    long chi_generic = 0;
    MotiveWithChi motive_at_infinity;
    long mu_total = 0;       // derived: 1 - chi_generic - lambda_total
    long lambda_total = 0;
    bool sentinel_ok = false;  // a random generic value had lambda = 0
    Rat sentinel_value;
    bool isolated = true;      // false when critical_values rejected the input
    std::string isolated_note;
};

BifurcationReport bifurcation_report(const LaurentPoly& f);

}  // namespace newton
