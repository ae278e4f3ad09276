#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satrees/errors.hpp"

namespace satrees {

using Expo = std::uint32_t;

// Exponent vector of a monomial (length = ring dimension).
using Exponent = std::vector<Expo>;

// Exponent vector of a multi-power (length = family arity r); the norm is the entry sum.
using MultiIndex = std::vector<Expo>;

/// Fixed polynomial ring context: d ordered, pairwise distinct variable names.
struct RingCtx {
    std::vector<std::string> vars;

    RingCtx() = default;
    explicit RingCtx(std::vector<std::string> names);

    int dim() const { return static_cast<int>(vars.size()); }
    std::optional<int> var_index(const std::string& name) const;

    bool operator==(const RingCtx&) const = default;
};

// Checked exponent arithmetic: overflow is a hard error, never wrapped.
Expo checked_add(Expo a, Expo b);
Expo checked_mul(Expo a, Expo b);

Exponent add_exp(const Exponent& a, const Exponent& b);
Exponent lcm_exp(const Exponent& a, const Exponent& b);
bool divides(const Exponent& a, const Exponent& b); // X^a | X^b
std::uint64_t total_degree(const Exponent& a);

std::uint64_t norm(const MultiIndex& n);
bool is_zero_index(const MultiIndex& n);

/// Graded-lexicographic comparison on multi-indices (by norm, then lex).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// Renders a monomial in input-grammar syntax, e.g. "X^2*Y"; the unit monomial is "1".
std::string monomial_to_string(const RingCtx& ring, const Exponent& e);

} // namespace satrees
