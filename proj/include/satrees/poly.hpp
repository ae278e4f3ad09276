#pragma once

#include <map>
#include <string>

#include "satrees/ideal.hpp"
#include "satrees/rational.hpp"
#include "satrees/ring.hpp"

namespace satrees {

/// Sparse polynomial with exact rational coefficients. No stored coefficient
/// is zero; an empty term map is the zero polynomial.
struct SparsePoly {
    RingCtx ring;
    std::map<Exponent, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
    }

    bool operator==(const SparsePoly&) const = default;
};

SparsePoly poly_zero(const RingCtx& ring);
SparsePoly poly_monomial(const RingCtx& ring, Exponent e, Rational c = 1);

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly multiply(const SparsePoly& f, const SparsePoly& g);
SparsePoly power(const SparsePoly& f, Expo k);

/// The monomial ideal generated by the support of f (minimalized).
MonomialIdeal support_ideal(const SparsePoly& f);

std::string to_string(const SparsePoly& f);

} // namespace satrees
