#pragma once

#include <vector>

#include "satrees/ideal.hpp"
#include "satrees/poly.hpp"

namespace satrees {

/// The tuple (I_1, ..., I_r ; J): r monomial ideals over a shared ring plus a
/// generating set for J (possibly empty = J unspecified). The maximal ideal of
/// the variables is representable as the list X_1, ..., X_d.
struct IdealFamily {
    RingCtx ring;
    std::vector<MonomialIdeal> ideals;
    std::vector<SparsePoly> j_gens;

    int arity() const { return static_cast<int>(ideals.size()); }

    bool operator==(const IdealFamily&) const = default;
};

IdealFamily make_family(std::vector<MonomialIdeal> ideals, std::vector<SparsePoly> j_gens);

/// The variable list X_1, ..., X_d as polynomials (the maximal ideal m).
std::vector<SparsePoly> maximal_ideal_gens(const RingCtx& ring);

/// True when j_gens is exactly the variable list (J = m).
bool j_is_maximal(const IdealFamily& family);

/// All multi-indices of length r with entries in [lo_k, hi_k], lex ascending.
std::vector<MultiIndex> grid_points(const std::vector<std::pair<Expo, Expo>>& ranges);

/// All n of length r with 1 <= |n| <= bound, in graded-lex order.
std::vector<MultiIndex> indices_with_norm_up_to(int r, Expo bound);

} // namespace satrees
