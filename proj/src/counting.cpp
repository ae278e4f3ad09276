#include "satrees/counting.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "satrees/saturation.hpp"

namespace satrees {

LengthValue count_quotient(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    detail::require_same_ring(outer.ring, inner.ring, "count_quotient");
    if (!contains_ideal(outer, inner))
        fail(ErrKind::precondition, "count_quotient: inner ideal not contained in outer");
    if (outer == inner) return LengthValue::finite(0);

    Exponent bounds(outer.ring.dim(), 0);
    for (const Exponent& g : outer.gens) bounds = lcm_exp(bounds, g);
    for (const Exponent& g : inner.gens) bounds = lcm_exp(bounds, g);

    std::uint64_t count = 0;
    Exponent cur(bounds.size(), 0);
    while (true) {
        if (contains(outer, cur) && !contains(inner, cur)) {
            // A point on the boundary slab translates to a ray in S \ I.
            for (size_t i = 0; i < cur.size(); ++i)
                if (cur[i] == bounds[i]) return LengthValue::inf();
            ++count;
        }
        size_t axis = bounds.size();
        bool advanced = false;
        while (axis > 0) {
            --axis;
            if (cur[axis] < bounds[axis]) {
                ++cur[axis];
                for (size_t j = axis + 1; j < bounds.size(); ++j) cur[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return LengthValue::finite(count);
}

void LengthTable::to_csv(std::ostream& out) const {
    for (int i = 1; i <= r; ++i) out << "n_" << i << ",";
    out << "value\n";
    for (const MultiIndex& n : domain) {
        for (Expo e : n) out << e << ",";
        const LengthValue& v = values.at(n);
        if (v.infinite)
            out << "INF\n";
        else
            out << v.count << "\n";
    }
}

LengthTable LengthTable::from_csv(std::istream& in) {
    LengthTable table;
    std::string line;
    if (!std::getline(in, line)) fail(ErrKind::parse, "csv: empty input");
    int fields = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
    if (fields < 2) fail(ErrKind::parse, "csv: header needs n_1,...,value");
    table.r = fields - 1;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        MultiIndex n;
        for (int i = 0; i < table.r; ++i) {
            if (!std::getline(row, cell, ','))
                fail(ErrKind::parse, "csv line " + std::to_string(lineno) + ": too few fields");
            try {
                n.push_back(static_cast<Expo>(std::stoul(cell)));
            } catch (const std::exception&) {
                fail(ErrKind::parse,
                     "csv line " + std::to_string(lineno) + ": bad index '" + cell + "'");
            }
        }
        if (!std::getline(row, cell, ','))
            fail(ErrKind::parse, "csv line " + std::to_string(lineno) + ": missing value");
        LengthValue v;
        if (cell == "INF") {
            v = LengthValue::inf();
        } else {
            try {
                v = LengthValue::finite(std::stoull(cell));
            } catch (const std::exception&) {
                fail(ErrKind::parse,
                     "csv line " + std::to_string(lineno) + ": bad value '" + cell + "'");
            }
        }
        table.domain.push_back(n);
        table.values[n] = v;
    }
    return table;
}

namespace {

// Shared power cache so grids do not recompute I_k^e from scratch.
class PowerCache {
  public:
    explicit PowerCache(const std::vector<MonomialIdeal>& ideals) : ideals_(ideals) {
        for (const MonomialIdeal& ideal : ideals_)
            powers_.push_back({unit_ideal(ideal.ring), ideal});
    }

    const MonomialIdeal& power_of(size_t k, Expo e) {
        auto& row = powers_[k];
        while (row.size() <= e) row.push_back(multiply(row.back(), ideals_[k]));
        return row[e];
    }

    MonomialIdeal product(const MultiIndex& n) {
        MonomialIdeal acc = power_of(0, n[0]);
        for (size_t k = 1; k < n.size(); ++k) acc = multiply(acc, power_of(k, n[k]));
        return acc;
    }

  private:
    const std::vector<MonomialIdeal>& ideals_;
    std::vector<std::vector<MonomialIdeal>> powers_;
};

} // namespace

LengthTable length_table(const IdealFamily& family, const std::vector<MultiIndex>& grid,
                         TableMode mode, const IdealFamily* outer) {
    LengthTable table;
    table.r = family.arity();
    table.domain = grid;

    if (mode == TableMode::torsion) {
        SaturationPlan plan = build_plan(family);
        PowerCache powers(family.ideals);
        for (const MultiIndex& n : grid) {
            MonomialIdeal sat = saturate_planned(plan, family, n);
            table.values[n] = count_quotient(sat, powers.product(n));
        }
        return table;
    }

    if (outer == nullptr)
        fail(ErrKind::precondition, "length_table: quotient mode needs a second family");
    detail::require_same_ring(family.ring, outer->ring, "length_table");
    if (outer->arity() != family.arity())
        fail(ErrKind::precondition, "length_table: family arities differ");
    for (int i = 0; i < family.arity(); ++i)
        if (!contains_ideal(outer->ideals[static_cast<size_t>(i)],
                            family.ideals[static_cast<size_t>(i)]))
            fail(ErrKind::precondition,
                 "length_table: inner family member " + std::to_string(i + 1) +
                     " is not contained in the outer one");
    PowerCache inner_powers(family.ideals);
    PowerCache outer_powers(outer->ideals);
    for (const MultiIndex& n : grid)
        table.values[n] = count_quotient(outer_powers.product(n), inner_powers.product(n));
    return table;
}

std::vector<Rational> epsilon_estimate(const IdealFamily& family, Expo t_max) {
    if (!j_is_maximal(family))
        fail(ErrKind::precondition, "epsilon_estimate: J must be the maximal ideal");
    std::vector<MultiIndex> diagonal;
    for (Expo t = 1; t <= t_max; ++t) diagonal.push_back(MultiIndex(family.arity(), t));
    LengthTable table = length_table(family, diagonal, TableMode::torsion);

    BigInt d_factorial = 1;
    for (int i = 2; i <= family.ring.dim(); ++i) d_factorial *= i;

    std::vector<Rational> out;
    for (Expo t = 1; t <= t_max; ++t) {
        const LengthValue& v = table.values.at(MultiIndex(family.arity(), t));
        if (v.infinite) fail(ErrKind::domain, "epsilon_estimate: infinite length on the diagonal");
        BigInt td = 1;
        for (int i = 0; i < family.ring.dim(); ++i) td *= t;
        out.emplace_back(d_factorial * v.count, td);
    }
    return out;
}

MonomialIdeal closed_form_2d(const IdealFamily& family, const MultiIndex& n) {
    if (family.ring.dim() != 2)
        fail(ErrKind::precondition, "closed_form_2d: ring must have two variables");
    if (!j_is_maximal(family))
        fail(ErrKind::precondition, "closed_form_2d: J must be the maximal ideal");
    if (n.size() != static_cast<size_t>(family.arity()))
        fail(ErrKind::dimension, "closed_form_2d: arity mismatch");
    Expo x_total = 0, y_total = 0;
    for (size_t j = 0; j < family.ideals.size(); ++j) {
        const MonomialIdeal& ideal = family.ideals[j];
        if (ideal.is_zero()) {
            if (n[j] > 0) return zero_ideal(family.ring);
            continue;
        }
        Expo ax = ideal.gens[0][0], by = ideal.gens[0][1];
        for (const Exponent& g : ideal.gens) {
            ax = std::min(ax, g[0]);
            by = std::min(by, g[1]);
        }
        x_total = checked_add(x_total, checked_mul(ax, n[j]));
        y_total = checked_add(y_total, checked_mul(by, n[j]));
    }
    return minimalize(family.ring, {{x_total, y_total}});
}

} // namespace satrees
