#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "satrees/family.hpp"
#include "satrees/ideal.hpp"
#include "satrees/poly.hpp"

namespace satrees {

/// Colon by the support ideal of f: the monomials m with m*h in I for every
/// support monomial h of f.
MonomialIdeal colon_by_poly(const MonomialIdeal& ideal, const SparsePoly& f);

/// Saturation I : (f)^inf. A single monomial f short-circuits to the exact
/// projection that kills its support variables; otherwise the support-colon
/// chain I : (f^k) is iterated until consecutive equality, with one extra
/// step verified.
MonomialIdeal saturate_by_poly(const MonomialIdeal& ideal, const SparsePoly& f);

/// Stable radical of the support ideals of powers of f, detected by the
/// doubling test sqrt(J_{f^n}) = sqrt(J_{f^{2n}}). The witness is the n at
/// which the doubling test first passed (starting from `start`).
struct AssociatedSquarefree {
    MonomialIdeal ideal;
    Expo witness;
};
AssociatedSquarefree associated_squarefree(const SparsePoly& f, Expo start = 1);

/// Precomputed projection data: the variable subsets F that saturation by J
/// factors through, independent of the multi-index, plus the projected family
/// members. Validated against the iterated-colon route on the probe indices.
struct SaturationPlan {
    IdealFamily family;
    std::vector<std::vector<int>> projections;         // sorted, deduped subsets
    std::vector<std::vector<MonomialIdeal>> projected; // [projection][member]
    std::vector<MultiIndex> validated_probes;
    Expo doubling_witness;
};

SaturationPlan build_plan(const IdealFamily& family, Expo probe_norm_bound = 3);

/// I^n : J^inf via per-generator saturation chains and intersection.
MonomialIdeal saturate_certified(const IdealFamily& family, const MultiIndex& n);

/// I^n : J^inf as the plan's intersection of products of projected powers.
MonomialIdeal saturate_planned(const SaturationPlan& plan, const IdealFamily& family,
                               const MultiIndex& n);

/// Saturation of a single monomial ideal by the family's J generators.
MonomialIdeal saturate_ideal(const MonomialIdeal& ideal, const std::vector<SparsePoly>& j_gens);

/// Third route for monomial J: intersection of the irreducible components
/// whose radical does not contain J.
MonomialIdeal saturate_via_decomposition(const MonomialIdeal& ideal, const MonomialIdeal& j);

/// Both sides of (prod (I_i : J^inf)^{a_i}) : J^inf = (prod I_i^{a_i}) : J^inf,
/// evaluated independently. A failing run is a bug, not a counterexample.
bool double_saturation_check(const IdealFamily& family, const MultiIndex& a);

/// Minimal k(n) with I^n : J^k = I^n : J^{k+1}, where the colon is taken by
/// the support ideal of the J generators; equality at one step is exact
/// certification by the colon chain law. alpha_emp = max ceil(k(n)/|n|).
struct AlphaReport {
    std::vector<std::pair<MultiIndex, unsigned>> table;
    unsigned alpha_emp;
};
AlphaReport alpha_stabilization(const IdealFamily& family, Expo grid_bound);

/// For each n with 1 <= |n| <= N in graded order, the number of minimal
/// generators of S_n = I^n : J^inf that are not in the subalgebra generated
/// below n (the ideal sum of S_a * S_b over a + b = n, a, b != 0).
std::vector<std::pair<MultiIndex, std::size_t>> rees_generation_degrees(const IdealFamily& family,
                                                                        Expo up_to);

/// True when no new generators appear in degrees of norm >= 2.
bool standard_graded(const std::vector<std::pair<MultiIndex, std::size_t>>& degrees);

} // namespace satrees
