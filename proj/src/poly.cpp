#include "satrees/poly.hpp"

namespace satrees {

SparsePoly poly_zero(const RingCtx& ring) { return SparsePoly{ring, {}}; }

SparsePoly poly_monomial(const RingCtx& ring, Exponent e, Rational c) {
    if (e.size() != static_cast<size_t>(ring.dim()))
        fail(ErrKind::dimension, "poly_monomial: exponent length mismatch");
    SparsePoly f{ring, {}};
    if (c != 0) f.terms.emplace(std::move(e), std::move(c));
    return f;
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
    detail::require_same_ring(f.ring, g.ring, "poly add");
    SparsePoly out = f;
    for (const auto& [e, c] : g.terms) {
        auto it = out.terms.find(e);
        if (it == out.terms.end()) {
            out.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

SparsePoly multiply(const SparsePoly& f, const SparsePoly& g) {
    detail::require_same_ring(f.ring, g.ring, "poly multiply");
    SparsePoly out{f.ring, {}};
    for (const auto& [ef, cf] : f.terms) {
        for (const auto& [eg, cg] : g.terms) {
            Exponent e = add_exp(ef, eg);
            Rational c = cf * cg;
            auto it = out.terms.find(e);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

SparsePoly power(const SparsePoly& f, Expo k) {
    SparsePoly acc = poly_monomial(f.ring, Exponent(f.ring.dim(), 0), 1);
    for (Expo i = 0; i < k; ++i) acc = multiply(acc, f);
    return acc;
}

MonomialIdeal support_ideal(const SparsePoly& f) {
    std::vector<Exponent> supp;
    supp.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms) supp.push_back(e);
    return minimalize(f.ring, std::move(supp));
}

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    // Terms in descending lex order, signs folded into the separators.
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit_monomial = total_degree(e) == 0;
        if (abs != 1 || unit_monomial) {
            out += rational_to_string(abs);
            if (!unit_monomial) out += "*";
        }
        if (!unit_monomial) out += monomial_to_string(f.ring, e);
    }
    return out;
}

} // namespace satrees
