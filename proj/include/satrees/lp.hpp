#pragma once

#include <vector>

#include "satrees/rational.hpp"

namespace satrees {

enum class Rel { le, eq, ge };

struct Constraint {
    std::vector<Rational> coeffs;
    Rel rel;
    Rational rhs;
};

/// Feasibility of { x in Q^n : x >= 0, and every constraint } decided exactly
/// by a phase-1 simplex with Bland's rule.
bool feasible_nonneg(int nvars, const std::vector<Constraint>& constraints);

/// Rank of a rational matrix by exact Gaussian elimination.
int rank_rational(std::vector<std::vector<Rational>> m);

} // namespace satrees
