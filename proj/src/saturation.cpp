#include "satrees/saturation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace satrees {

namespace {

std::vector<int> support_of(const Exponent& e) {
    std::vector<int> out;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) out.push_back(static_cast<int>(i));
    return out;
}

std::string index_to_string(const MultiIndex& n) {
    std::string out = "(";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(n[i]);
    }
    return out + ")";
}

} // namespace

MonomialIdeal colon_by_poly(const MonomialIdeal& ideal, const SparsePoly& f) {
    detail::require_same_ring(ideal.ring, f.ring, "colon_by_poly");
    if (f.is_zero()) fail(ErrKind::domain, "colon_by_poly: zero polynomial");
    return colon(ideal, support_ideal(f));
}

MonomialIdeal saturate_by_poly(const MonomialIdeal& ideal, const SparsePoly& f) {
    detail::require_same_ring(ideal.ring, f.ring, "saturate_by_poly");
    if (f.is_zero()) fail(ErrKind::domain, "saturate_by_poly: zero polynomial");
    if (ideal.is_zero()) return ideal; // (0) : (f)^inf = (0) in a domain
    if (f.is_monomial())
        return project(ideal, support_of(f.terms.begin()->first));

    MonomialIdeal prev = ideal; // I : (f^0)
    SparsePoly fk = power(f, 0);
    constexpr Expo kMaxSteps = 256;
    for (Expo k = 1; k <= kMaxSteps; ++k) {
        fk = multiply(fk, f);
        MonomialIdeal cur = colon(ideal, support_ideal(fk));
        if (cur == prev) {
            // one extra step guards the stopping rule
            MonomialIdeal next = colon(ideal, support_ideal(multiply(fk, f)));
            if (next != cur)
                fail(ErrKind::validation,
                     "saturate_by_poly: colon chain resumed after apparent stabilization");
            return cur;
        }
        prev = cur;
    }
    fail(ErrKind::resource, "saturate_by_poly: chain did not stabilize within budget");
}

AssociatedSquarefree associated_squarefree(const SparsePoly& f, Expo start) {
    if (f.is_zero()) fail(ErrKind::domain, "associated_squarefree: zero polynomial");
    if (start < 1) start = 1;
    if (f.is_monomial()) return {radical(support_ideal(f)), start};

    constexpr Expo kMaxWitness = 1u << 12;
    Expo n = start;
    SparsePoly fn = power(f, n);
    MonomialIdeal rad_n = radical(support_ideal(fn));
    while (n <= kMaxWitness) {
        SparsePoly f2n = multiply(fn, fn);
        MonomialIdeal rad_2n = radical(support_ideal(f2n));
        if (rad_2n == rad_n) return {rad_n, n};
        n *= 2;
        fn = std::move(f2n);
        rad_n = std::move(rad_2n);
    }
    fail(ErrKind::resource, "associated_squarefree: radical chain did not stabilize");
}

MonomialIdeal saturate_ideal(const MonomialIdeal& ideal, const std::vector<SparsePoly>& j_gens) {
    if (j_gens.empty()) fail(ErrKind::precondition, "saturation requires J generators");
    MonomialIdeal acc = saturate_by_poly(ideal, j_gens[0]);
    for (size_t i = 1; i < j_gens.size(); ++i)
        acc = intersect(acc, saturate_by_poly(ideal, j_gens[i]));
    return acc;
}

MonomialIdeal saturate_certified(const IdealFamily& family, const MultiIndex& n) {
    if (family.j_gens.empty()) fail(ErrKind::precondition, "saturate_certified: family has no J");
    return saturate_ideal(multi_power(family.ideals, n), family.j_gens);
}

namespace {

MonomialIdeal planned_value(const SaturationPlan& plan, const MultiIndex& n) {
    const RingCtx& ring = plan.family.ring;
    MonomialIdeal acc = unit_ideal(ring);
    for (size_t p = 0; p < plan.projections.size(); ++p) {
        MonomialIdeal prod = unit_ideal(ring);
        for (size_t k = 0; k < plan.projected[p].size(); ++k)
            prod = multiply(prod, power(plan.projected[p][k], n[k]));
        acc = intersect(acc, prod);
    }
    return acc;
}

} // namespace

SaturationPlan build_plan(const IdealFamily& family, Expo probe_norm_bound) {
    if (family.j_gens.empty()) fail(ErrKind::precondition, "build_plan: family has no J");
    const std::vector<MultiIndex> probes =
        indices_with_norm_up_to(family.arity(), probe_norm_bound);

    Expo window = 1;
    constexpr int kEscalations = 4;
    MultiIndex counterexample;
    for (int attempt = 0; attempt < kEscalations; ++attempt) {
        Expo witness = window;
        std::set<std::vector<int>> subsets;
        for (const SparsePoly& f : family.j_gens) {
            AssociatedSquarefree q = associated_squarefree(f, window);
            witness = std::max(witness, q.witness);
            for (const Exponent& g : q.ideal.gens) subsets.insert(support_of(g));
        }

        SaturationPlan plan;
        plan.family = family;
        plan.projections.assign(subsets.begin(), subsets.end());
        plan.doubling_witness = witness;
        for (const std::vector<int>& f_set : plan.projections) {
            std::vector<MonomialIdeal> row;
            for (const MonomialIdeal& ideal : family.ideals) row.push_back(project(ideal, f_set));
            plan.projected.push_back(std::move(row));
        }

        bool ok = true;
        for (const MultiIndex& n : probes) {
            if (planned_value(plan, n) != saturate_certified(family, n)) {
                ok = false;
                counterexample = n;
                break;
            }
        }
        if (ok) {
            plan.validated_probes = probes;
            return plan;
        }
        window *= 2;
    }
    fail(ErrKind::validation, "build_plan: projection formula disagreed with iterated colon at n=" +
                                  index_to_string(counterexample));
}

MonomialIdeal saturate_planned(const SaturationPlan& plan, const IdealFamily& family,
                               const MultiIndex& n) {
    if (plan.family != family)
        fail(ErrKind::precondition, "saturate_planned: plan was built from a different family");
    if (n.size() != static_cast<size_t>(family.arity()))
        fail(ErrKind::dimension, "saturate_planned: arity mismatch");
    return planned_value(plan, n);
}

MonomialIdeal saturate_via_decomposition(const MonomialIdeal& ideal, const MonomialIdeal& j) {
    detail::require_same_ring(ideal.ring, j.ring, "saturate_via_decomposition");
    if (j.is_zero()) fail(ErrKind::domain, "saturate_via_decomposition: J is zero");
    if (ideal.is_zero() || ideal.is_unit()) return ideal;
    MonomialIdeal acc = unit_ideal(ideal.ring);
    for (const MonomialIdeal& comp : irreducible_decomposition(ideal)) {
        // J lies in the radical of a pure-power component iff every J
        // generator touches the component's variables.
        std::vector<bool> comp_vars(ideal.ring.dim(), false);
        for (const Exponent& g : comp.gens)
            for (size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0) comp_vars[i] = true;
        bool j_in_radical = true;
        for (const Exponent& h : j.gens) {
            bool touches = false;
            for (size_t i = 0; i < h.size(); ++i)
                if (h[i] > 0 && comp_vars[i]) touches = true;
            if (!touches) j_in_radical = false;
        }
        if (!j_in_radical) acc = intersect(acc, comp);
    }
    return acc;
}

bool double_saturation_check(const IdealFamily& family, const MultiIndex& a) {
    if (family.j_gens.empty())
        fail(ErrKind::precondition, "double_saturation_check: family has no J");
    std::vector<MonomialIdeal> saturated;
    for (const MonomialIdeal& ideal : family.ideals)
        saturated.push_back(saturate_ideal(ideal, family.j_gens));
    IdealFamily lhs_family{family.ring, std::move(saturated), family.j_gens};
    MonomialIdeal lhs = saturate_certified(lhs_family, a);
    MonomialIdeal rhs = saturate_certified(family, a);
    return lhs == rhs;
}

AlphaReport alpha_stabilization(const IdealFamily& family, Expo grid_bound) {
    if (family.j_gens.empty())
        fail(ErrKind::precondition, "alpha_stabilization: family has no J");
    std::vector<Exponent> support;
    for (const SparsePoly& f : family.j_gens)
        for (const auto& [e, c] : f.terms) support.push_back(e);
    MonomialIdeal j_support = minimalize(family.ring, std::move(support));

    AlphaReport report;
    report.alpha_emp = 0;
    for (const MultiIndex& n : indices_with_norm_up_to(family.arity(), grid_bound)) {
        MonomialIdeal cur = multi_power(family.ideals, n);
        unsigned k = 0;
        while (true) {
            MonomialIdeal next = colon(cur, j_support);
            if (next == cur) break;
            cur = std::move(next);
            ++k;
        }
        report.table.emplace_back(n, k);
        unsigned ratio = static_cast<unsigned>((k + norm(n) - 1) / norm(n));
        report.alpha_emp = std::max(report.alpha_emp, ratio);
    }
    return report;
}

std::vector<std::pair<MultiIndex, std::size_t>> rees_generation_degrees(const IdealFamily& family,
                                                                        Expo up_to) {
    if (up_to < 1) fail(ErrKind::precondition, "rees_generation_degrees: bound must be >= 1");
    std::map<MultiIndex, MonomialIdeal> graded_piece;
    graded_piece[MultiIndex(family.arity(), 0)] = unit_ideal(family.ring);

    std::vector<std::pair<MultiIndex, std::size_t>> out;
    for (const MultiIndex& n : indices_with_norm_up_to(family.arity(), up_to)) {
        MonomialIdeal s_n = saturate_certified(family, n);
        graded_piece[n] = s_n;

        // ideal generated by all S_a * S_b with a + b = n, both nonzero
        std::vector<Exponent> below;
        MultiIndex a(n.size(), 0);
        while (true) {
            if (!is_zero_index(a) && a != n) {
                MultiIndex b(n.size());
                for (size_t i = 0; i < n.size(); ++i) b[i] = n[i] - a[i];
                const MonomialIdeal& sa = graded_piece.at(a);
                const MonomialIdeal& sb = graded_piece.at(b);
                for (const Exponent& g : sa.gens)
                    for (const Exponent& h : sb.gens) below.push_back(add_exp(g, h));
            }
            size_t axis = n.size();
            bool advanced = false;
            while (axis > 0) {
                --axis;
                if (a[axis] < n[axis]) {
                    ++a[axis];
                    for (size_t j = axis + 1; j < n.size(); ++j) a[j] = 0;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        MonomialIdeal generated_below = minimalize(family.ring, std::move(below));

        std::size_t fresh = 0;
        for (const Exponent& g : s_n.gens)
            if (!contains(generated_below, g)) ++fresh;
        out.emplace_back(n, fresh);
    }
    return out;
}

bool standard_graded(const std::vector<std::pair<MultiIndex, std::size_t>>& degrees) {
    for (const auto& [n, fresh] : degrees)
        if (norm(n) >= 2 && fresh > 0) return false;
    return true;
}

} // namespace satrees
