#pragma once

#include <span>

#include "satrees/family.hpp"
#include "satrees/ideal.hpp"

namespace satrees {

/// Vertices of conv(generator exponents) + nonnegative orthant, each one a
/// generator exponent not expressible over the others.
struct NewtonPolyhedron {
    RingCtx ring;
    std::vector<Exponent> vertices;
    std::vector<Exponent> source_gens;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Exact membership a in conv(vertices) + orthant.
bool np_contains(const NewtonPolyhedron& np, const Exponent& a);

/// Minimal lattice points of the Newton polyhedron.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// 1 + the maximal dimension of a compact face (a vertex subset admitting a
/// strictly positive supporting normal).
unsigned analytic_spread(const MonomialIdeal& ideal);

/// Spread of the product plus r - 1.
unsigned multi_analytic_spread(std::span<const MonomialIdeal> family);

enum class Inclusion { holds, fails, not_applicable };

/// Checks saturate(I^n) inside the integral closure of I^n, applicable when
/// the product's spread is at most d - 1.
Inclusion closure_inclusion_check(const IdealFamily& family, const MultiIndex& n);

} // namespace satrees
