#include "satrees/geometry.hpp"

#include <algorithm>

#include "satrees/lp.hpp"
#include "satrees/saturation.hpp"

namespace satrees {

namespace {

// lambda >= 0 over `points`, sum lambda = 1, sum lambda_i points[i] <= target.
bool in_hull_plus_orthant(const std::vector<Exponent>& points, const Exponent& target) {
    if (points.empty()) return false;
    const int k = static_cast<int>(points.size());
    const size_t d = target.size();
    std::vector<Constraint> cons;
    Constraint sum_one{std::vector<Rational>(k, 1), Rel::eq, 1};
    cons.push_back(std::move(sum_one));
    for (size_t c = 0; c < d; ++c) {
        Constraint row{std::vector<Rational>(k), Rel::le, Rational(target[c])};
        for (int i = 0; i < k; ++i) row.coeffs[i] = Rational(points[static_cast<size_t>(i)][c]);
        cons.push_back(std::move(row));
    }
    return feasible_nonneg(k, cons);
}

// Strictly positive w (componentwise >= 1 after scaling) with <w, v> equal on
// `face` and <w, u> at least that value on `others`.
bool has_positive_equalizing_normal(const std::vector<Exponent>& face,
                                    const std::vector<Exponent>& others) {
    const size_t d = face[0].size();
    const Exponent& v0 = face[0];
    std::vector<Constraint> cons;
    auto shifted_row = [&](const Exponent& v, Rel rel) {
        // sum_c (v - v0)_c * (1 + w'_c) (rel) 0, with w' >= 0
        Constraint row{std::vector<Rational>(d), rel, 0};
        Rational shift = 0;
        for (size_t c = 0; c < d; ++c) {
            Rational diff = Rational(v[c]) - Rational(v0[c]);
            row.coeffs[c] = diff;
            shift += diff;
        }
        row.rhs = -shift;
        return row;
    };
    for (size_t i = 1; i < face.size(); ++i) cons.push_back(shifted_row(face[i], Rel::eq));
    for (const Exponent& u : others) cons.push_back(shifted_row(u, Rel::ge));
    return feasible_nonneg(static_cast<int>(d), cons);
}

int affine_dimension(const std::vector<Exponent>& points) {
    if (points.size() <= 1) return 0;
    std::vector<std::vector<Rational>> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> row(points[0].size());
        for (size_t c = 0; c < points[0].size(); ++c)
            row[c] = Rational(points[i][c]) - Rational(points[0][c]);
        diffs.push_back(std::move(row));
    }
    return rank_rational(std::move(diffs));
}

} // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "newton_polyhedron: zero ideal");
    NewtonPolyhedron np{ideal.ring, {}, ideal.gens};
    for (size_t i = 0; i < ideal.gens.size(); ++i) {
        std::vector<Exponent> others;
        for (size_t j = 0; j < ideal.gens.size(); ++j)
            if (j != i) others.push_back(ideal.gens[j]);
        if (!in_hull_plus_orthant(others, ideal.gens[i])) np.vertices.push_back(ideal.gens[i]);
    }
    return np;
}

bool np_contains(const NewtonPolyhedron& np, const Exponent& a) {
    if (a.size() != static_cast<size_t>(np.ring.dim()))
        fail(ErrKind::dimension, "np_contains: exponent length mismatch");
    return in_hull_plus_orthant(np.vertices, a);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "integral_closure: zero ideal");
    NewtonPolyhedron np = newton_polyhedron(ideal);

    // Minimal closure generators live in the box spanned by the vertices.
    Exponent bounds(np.ring.dim(), 0);
    for (const Exponent& v : np.vertices) bounds = lcm_exp(bounds, v);
    std::vector<size_t> strides(bounds.size(), 1);
    size_t cells = 1;
    for (size_t i = bounds.size(); i-- > 0;) {
        strides[i] = cells;
        cells *= bounds[i] + 1;
    }

    // Membership is upward closed, so a point needs an LP test only when all
    // of its lower neighbours are outside.
    std::vector<char> inside(cells, 0);
    std::vector<Exponent> minimal;
    Exponent cur(bounds.size(), 0);
    for (size_t cell = 0; cell < cells; ++cell) {
        bool lower_inside = false;
        for (size_t i = 0; i < cur.size() && !lower_inside; ++i)
            if (cur[i] > 0 && inside[cell - strides[i]]) lower_inside = true;
        if (lower_inside) {
            inside[cell] = 1;
        } else if (np_contains(np, cur)) {
            inside[cell] = 1;
            minimal.push_back(cur);
        }
        for (size_t i = cur.size(); i-- > 0;) {
            if (cur[i] < bounds[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
    }
    return minimalize(ideal.ring, std::move(minimal));
}

unsigned analytic_spread(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        fail(ErrKind::domain, "analytic_spread: ideal must be nonzero and proper");
    NewtonPolyhedron np = newton_polyhedron(ideal);
    const int d = np.ring.dim();
    const int nv = static_cast<int>(np.vertices.size());
    int best = 0;
    const int max_size = std::min(d, nv);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (!pick.empty()) {
            std::vector<Exponent> face, others;
            std::vector<bool> chosen(np.vertices.size(), false);
            for (int i : pick) chosen[static_cast<size_t>(i)] = true;
            for (size_t i = 0; i < np.vertices.size(); ++i)
                (chosen[i] ? face : others).push_back(np.vertices[i]);
            int dim = affine_dimension(face);
            if (dim > best && has_positive_equalizing_normal(face, others)) best = dim;
        }
        if (static_cast<int>(pick.size()) == max_size || best == d - 1) return;
        for (int i = start; i < nv; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
            if (best == d - 1) return;
        }
    };
    rec(rec, 0);
    return static_cast<unsigned>(1 + best);
}

unsigned multi_analytic_spread(std::span<const MonomialIdeal> family) {
    if (family.empty()) fail(ErrKind::domain, "multi_analytic_spread: empty family");
    MonomialIdeal product = multi_power(family, MultiIndex(family.size(), 1));
    return analytic_spread(product) + static_cast<unsigned>(family.size()) - 1;
}

Inclusion closure_inclusion_check(const IdealFamily& family, const MultiIndex& n) {
    if (family.j_gens.empty())
        fail(ErrKind::precondition, "closure_inclusion_check: family has no J");
    MonomialIdeal product = multi_power(family.ideals, MultiIndex(n.size(), 1));
    if (product.is_zero() || product.is_unit()) return Inclusion::not_applicable;
    unsigned spread = analytic_spread(product);
    if (spread > static_cast<unsigned>(family.ring.dim()) - 1) return Inclusion::not_applicable;

    MonomialIdeal powered = multi_power(family.ideals, n);
    MonomialIdeal saturated = saturate_certified(family, n);
    if (powered.is_zero()) return saturated.is_zero() ? Inclusion::holds : Inclusion::fails;
    if (powered.is_unit()) return Inclusion::holds;
    NewtonPolyhedron np = newton_polyhedron(powered);
    for (const Exponent& g : saturated.gens)
        if (!np_contains(np, g)) return Inclusion::fails;
    return Inclusion::holds;
}

} // namespace satrees
