#include "satrees/ideal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace satrees {

namespace detail {
void require_same_ring(const RingCtx& a, const RingCtx& b, const char* op) {
    if (a != b) fail(ErrKind::dimension, std::string(op) + ": ring context mismatch");
}
} // namespace detail

MonomialIdeal zero_ideal(const RingCtx& ring) { return MonomialIdeal{ring, {}}; }

MonomialIdeal unit_ideal(const RingCtx& ring) {
    return MonomialIdeal{ring, {Exponent(ring.dim(), 0)}};
}

namespace {

// Staircase sweep for two variables: after a lex sort only the least Y per X
// survives, and only while Y strictly drops.
std::vector<Exponent> antichain_2d(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    std::vector<Exponent> out;
    std::uint64_t min_y = std::numeric_limits<std::uint64_t>::max();
    size_t i = 0;
    while (i < gens.size()) {
        size_t j = i;
        while (j < gens.size() && gens[j][0] == gens[i][0]) ++j;
        if (gens[i][1] < min_y) {
            min_y = gens[i][1];
            out.push_back(gens[i]);
        }
        i = j;
    }
    return out;
}

std::vector<Exponent> antichain_general(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (const Exponent& g : gens) {
        bool dominated = false;
        for (const Exponent& kept : out) {
            if (divides(kept, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdeal minimalize(const RingCtx& ring, std::vector<Exponent> gens) {
    const size_t d = static_cast<size_t>(ring.dim());
    for (const Exponent& g : gens)
        if (g.size() != d) fail(ErrKind::dimension, "minimalize: exponent length mismatch");
    std::vector<Exponent> kept = (d == 2) ? antichain_2d(std::move(gens))
                                          : antichain_general(std::move(gens));
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal{ring, std::move(kept)};
}

bool contains(const MonomialIdeal& ideal, const Exponent& m) {
    if (m.size() != static_cast<size_t>(ideal.ring.dim()))
        fail(ErrKind::dimension, "contains: exponent length mismatch");
    for (const Exponent& g : ideal.gens)
        if (divides(g, m)) return true;
    return false;
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    detail::require_same_ring(outer.ring, inner.ring, "contains_ideal");
    for (const Exponent& g : inner.gens)
        if (!contains(outer, g)) return false;
    return true;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ring(a.ring, b.ring, "multiply");
    if (a.is_zero() || b.is_zero()) return zero_ideal(a.ring);
    std::vector<Exponent> products;
    products.reserve(a.gens.size() * b.gens.size());
    for (const Exponent& g : a.gens)
        for (const Exponent& h : b.gens) products.push_back(add_exp(g, h));
    return minimalize(a.ring, std::move(products));
}

MonomialIdeal power(const MonomialIdeal& a, Expo k) {
    MonomialIdeal acc = unit_ideal(a.ring);
    for (Expo i = 0; i < k; ++i) acc = multiply(acc, a);
    return acc;
}

MonomialIdeal multi_power(std::span<const MonomialIdeal> family, const MultiIndex& n) {
    if (family.empty()) fail(ErrKind::domain, "multi_power: empty family");
    if (family.size() != n.size()) fail(ErrKind::dimension, "multi_power: arity mismatch");
    const RingCtx& ring = family[0].ring;
    MonomialIdeal acc = unit_ideal(ring);
    for (size_t k = 0; k < family.size(); ++k) {
        detail::require_same_ring(ring, family[k].ring, "multi_power");
        acc = multiply(acc, power(family[k], n[k]));
    }
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_ring(a.ring, b.ring, "intersect");
    if (a.is_zero() || b.is_zero()) return zero_ideal(a.ring);
    std::vector<Exponent> lcms;
    lcms.reserve(a.gens.size() * b.gens.size());
    for (const Exponent& g : a.gens)
        for (const Exponent& h : b.gens) lcms.push_back(lcm_exp(g, h));
    return minimalize(a.ring, std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& m) {
    if (m.size() != static_cast<size_t>(ideal.ring.dim()))
        fail(ErrKind::dimension, "colon: exponent length mismatch");
    std::vector<Exponent> shifted;
    shifted.reserve(ideal.gens.size());
    for (const Exponent& g : ideal.gens) {
        Exponent q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
        shifted.push_back(std::move(q));
    }
    return minimalize(ideal.ring, std::move(shifted));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    detail::require_same_ring(ideal.ring, by.ring, "colon");
    if (by.is_zero()) fail(ErrKind::domain, "colon: divisor ideal is zero");
    MonomialIdeal acc = unit_ideal(ideal.ring);
    bool first = true;
    for (const Exponent& h : by.gens) {
        MonomialIdeal piece = colon(ideal, h);
        acc = first ? piece : intersect(acc, piece);
        first = false;
    }
    return acc;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Exponent> supports;
    supports.reserve(ideal.gens.size());
    for (const Exponent& g : ideal.gens) {
        Exponent s(g.size());
        for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
        supports.push_back(std::move(s));
    }
    return minimalize(ideal.ring, std::move(supports));
}

namespace {

void decompose_rec(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& out) {
    if (ideal.is_unit()) return; // the unit ideal contributes no component
    // Find a generator mixing at least two variables.
    for (const Exponent& g : ideal.gens) {
        int support = 0, pivot = -1;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) {
                ++support;
                pivot = static_cast<int>(i);
            }
        if (support < 2) continue;
        // Split I = (I + (X_i^{a_i})) ∩ (I + (X^{a - a_i e_i})).
        Exponent pure(g.size(), 0);
        pure[pivot] = g[pivot];
        Exponent rest = g;
        rest[pivot] = 0;
        std::vector<Exponent> left = ideal.gens, right = ideal.gens;
        left.push_back(pure);
        right.push_back(rest);
        decompose_rec(minimalize(ideal.ring, std::move(left)), out);
        decompose_rec(minimalize(ideal.ring, std::move(right)), out);
        return;
    }
    out.push_back(ideal); // all generators are pure variable powers
}

MonomialIdeal intersect_all(const RingCtx& ring, const std::vector<MonomialIdeal>& parts,
                            size_t skip = std::numeric_limits<size_t>::max()) {
    MonomialIdeal acc = unit_ideal(ring);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == skip) continue;
        acc = intersect(acc, parts[i]);
    }
    return acc;
}

} // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "irreducible_decomposition: zero ideal");
    std::vector<MonomialIdeal> components;
    decompose_rec(ideal, components);
    std::sort(components.begin(), components.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });
    components.erase(std::unique(components.begin(), components.end()), components.end());
    // Drop components containing the intersection of the others.
    bool changed = true;
    while (changed && components.size() > 1) {
        changed = false;
        for (size_t i = 0; i < components.size(); ++i) {
            MonomialIdeal rest = intersect_all(ideal.ring, components, i);
            if (contains_ideal(components[i], rest)) {
                components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return components;
}

MonomialIdeal project(const MonomialIdeal& ideal, const std::vector<int>& kill) {
    std::vector<bool> killed(ideal.ring.dim(), false);
    for (int i : kill) {
        if (i < 0 || i >= ideal.ring.dim()) fail(ErrKind::dimension, "project: index out of range");
        killed[static_cast<size_t>(i)] = true;
    }
    std::vector<Exponent> projected;
    projected.reserve(ideal.gens.size());
    for (const Exponent& g : ideal.gens) {
        Exponent p = g;
        for (size_t i = 0; i < p.size(); ++i)
            if (killed[i]) p[i] = 0;
        projected.push_back(std::move(p));
    }
    return minimalize(ideal.ring, std::move(projected));
}

std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const Exponent& g : ideal.gens) {
        if (!out.empty()) out += ", ";
        out += monomial_to_string(ideal.ring, g);
    }
    return out;
}

} // namespace satrees
