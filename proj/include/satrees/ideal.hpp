#pragma once

#include <span>
#include <string>
#include <vector>

#include "satrees/ring.hpp"

namespace satrees {

/// Monomial ideal in canonical form: the minimal generating set, stored as a
/// lex-sorted antichain of exponent vectors. Empty generator list is the zero
/// ideal; the single all-zero exponent is the unit ideal. Values are immutable
/// by convention: every operation returns a fresh ideal.
struct MonomialIdeal {
    RingCtx ring;
    std::vector<Exponent> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && total_degree(gens[0]) == 0; }

    bool operator==(const MonomialIdeal&) const = default;
};

MonomialIdeal zero_ideal(const RingCtx& ring);
MonomialIdeal unit_ideal(const RingCtx& ring);

/// Canonicalizes an arbitrary generating multiset: drops divisible generators,
/// dedupes, sorts lex. Idempotent and insensitive to input order.
MonomialIdeal minimalize(const RingCtx& ring, std::vector<Exponent> gens);

/// Membership: some generator divides m componentwise.
bool contains(const MonomialIdeal& ideal, const Exponent& m);

/// Ideal containment: inner ⊆ outer.
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, Expo k);

/// Product of powers I_1^{n_1} ... I_r^{n_r}; n = 0 yields the unit ideal.
MonomialIdeal multi_power(std::span<const MonomialIdeal> family, const MultiIndex& n);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Colon by a single monomial: generator-wise truncated subtraction.
MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& m);

/// Colon by a nonzero monomial ideal: intersection over its generators.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

MonomialIdeal radical(const MonomialIdeal& ideal);

/// Irredundant decomposition into ideals generated by pure variable powers.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

/// Sets the variables listed in `kill` (0-based indices) to 1 on every generator.
MonomialIdeal project(const MonomialIdeal& ideal, const std::vector<int>& kill);

std::string to_string(const MonomialIdeal& ideal);

namespace detail {
void require_same_ring(const RingCtx& a, const RingCtx& b, const char* op);
}

} // namespace satrees
