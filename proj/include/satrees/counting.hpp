#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "satrees/family.hpp"
#include "satrees/ideal.hpp"
#include "satrees/rational.hpp"

namespace satrees {

/// Exact count or the infinity sentinel.
struct LengthValue {
    bool infinite = false;
    std::uint64_t count = 0;

    static LengthValue finite(std::uint64_t c) { return {false, c}; }
    static LengthValue inf() { return {true, 0}; }
    bool operator==(const LengthValue&) const = default;
};

/// Number of monomials in S but not in I (requires I inside S). Returns the
/// infinity sentinel when a witness on the bounding box's boundary slab
/// proves a translation ray.
LengthValue count_quotient(const MonomialIdeal& outer, const MonomialIdeal& inner);

enum class TableMode { torsion, quotient };

/// Grid-indexed lengths. Torsion mode: monomials in the saturation of I^n and
/// not in I^n. Quotient mode: monomials in the outer family's power and not
/// in this family's power.
struct LengthTable {
    int r = 1;
    std::vector<MultiIndex> domain;
    std::map<MultiIndex, LengthValue> values;

    void to_csv(std::ostream& out) const;
    static LengthTable from_csv(std::istream& in);
};

LengthTable length_table(const IdealFamily& family, const std::vector<MultiIndex>& grid,
                         TableMode mode, const IdealFamily* outer = nullptr);

/// The sequence d! * L(t*1) / t^d for t = 1..t_max (torsion lengths on the
/// diagonal; J must be the maximal ideal). Raw sequence, no convergence claim.
std::vector<Rational> epsilon_estimate(const IdealFamily& family, Expo t_max);

/// Two-variable closed form: the principal ideal X^(sum a_j n_j) Y^(sum b_j n_j)
/// with a_j, b_j the minimal X- and Y-exponents of the j-th member.
MonomialIdeal closed_form_2d(const IdealFamily& family, const MultiIndex& n);

} // namespace satrees
