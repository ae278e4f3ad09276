#include "satrees/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace satrees {

RingCtx::RingCtx(std::vector<std::string> names) : vars(std::move(names)) {
    if (vars.empty()) fail(ErrKind::domain, "ring needs at least one variable");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) fail(ErrKind::domain, "ring variable names must be distinct");
}

std::optional<int> RingCtx::var_index(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) return std::nullopt;
    return static_cast<int>(it - vars.begin());
}

Expo checked_add(Expo a, Expo b) {
    if (a > std::numeric_limits<Expo>::max() - b)
        fail(ErrKind::domain, "exponent overflow in addition");
    return a + b;
}

Expo checked_mul(Expo a, Expo b) {
    if (b != 0 && a > std::numeric_limits<Expo>::max() / b)
        fail(ErrKind::domain, "exponent overflow in multiplication");
    return a * b;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) fail(ErrKind::dimension, "exponent length mismatch");
    Exponent out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) fail(ErrKind::dimension, "exponent length mismatch");
    Exponent out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) fail(ErrKind::dimension, "exponent length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::uint64_t total_degree(const Exponent& a) {
    std::uint64_t s = 0;
    for (Expo e : a) s += e;
    return s;
}

std::uint64_t norm(const MultiIndex& n) { return total_degree(n); }

bool is_zero_index(const MultiIndex& n) {
    return std::all_of(n.begin(), n.end(), [](Expo e) { return e == 0; });
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

std::string monomial_to_string(const RingCtx& ring, const Exponent& e) {
    std::string out;
    for (int i = 0; i < ring.dim(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace satrees
