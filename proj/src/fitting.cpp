#include "satrees/fitting.hpp"

#include <algorithm>
#include <sstream>

#include "satrees/errors.hpp"

namespace satrees {

unsigned NumericalPolynomial::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : coeffs) {
        unsigned t = 0;
        for (unsigned k : e) t += k;
        deg = std::max(deg, t);
    }
    return deg;
}

Rational NumericalPolynomial::eval(const MultiIndex& n) const {
    Rational acc = 0;
    for (const auto& [e, c] : coeffs) {
        Rational term = c;
        for (size_t a = 0; a < e.size(); ++a) {
            BigInt p = 1;
            for (unsigned i = 0; i < e[a]; ++i) p *= n[a];
            term *= Rational(p);
        }
        acc += term;
    }
    return acc;
}

namespace {

std::string var_name(int r, size_t axis, const std::string& override_name) {
    if (r == 1) return override_name.empty() ? "n" : override_name;
    return "n" + std::to_string(axis + 1);
}

// descending by total degree, then lex descending: matches the printed order
std::vector<std::pair<std::vector<unsigned>, Rational>>
sorted_terms(const NumericalPolynomial& p) {
    std::vector<std::pair<std::vector<unsigned>, Rational>> terms(p.coeffs.begin(),
                                                                  p.coeffs.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (unsigned k : a.first) da += k;
        for (unsigned k : b.first) db += k;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return terms;
}

} // namespace

std::string NumericalPolynomial::to_formula(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : sorted_terms(*this)) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        unsigned tdeg = 0;
        for (unsigned k : e) tdeg += k;
        std::string mono;
        for (size_t a = 0; a < e.size(); ++a) {
            if (e[a] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(r, a, var);
            if (e[a] > 1) mono += "^" + std::to_string(e[a]);
        }
        if (abs != 1 || tdeg == 0) {
            out += rational_to_string(abs);
            if (tdeg > 0) out += "*";
        }
        out += mono;
    }
    return out;
}

std::string NumericalPolynomial::to_json(const std::string& var) const {
    std::ostringstream out;
    out << "{\"vars\":[";
    for (int a = 0; a < r; ++a) {
        if (a) out << ",";
        out << "\"" << var_name(r, static_cast<size_t>(a), var) << "\"";
    }
    out << "],\"total_degree\":" << total_degree() << ",\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : sorted_terms(*this)) {
        if (!first) out << ",";
        first = false;
        out << "{\"monomial\":[";
        for (size_t a = 0; a < e.size(); ++a) {
            if (a) out << ",";
            out << e[a];
        }
        out << "],\"coefficient\":\"" << rational_to_string(c) << "\"}";
    }
    out << "]}";
    return out.str();
}

namespace {

// Monomial coefficients of the Newton basis polynomials
// N_k(x) = prod_{i<k} (x - nodes[i]), k = 0..depth.
std::vector<std::vector<Rational>> newton_basis(const std::vector<Rational>& nodes) {
    std::vector<std::vector<Rational>> basis;
    basis.push_back({1});
    for (size_t k = 0; k < nodes.size(); ++k) {
        const std::vector<Rational>& prev = basis.back();
        std::vector<Rational> next(prev.size() + 1, 0);
        for (size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] += prev[i];
            next[i] -= prev[i] * nodes[k];
        }
        basis.push_back(std::move(next));
    }
    return basis;
}

NumericalPolynomial expand_from_newton(int r, const std::vector<unsigned>& shape,
                                       const std::vector<Rational>& newton_coeffs,
                                       const std::vector<std::vector<Rational>>& basis) {
    NumericalPolynomial poly;
    poly.r = r;
    const size_t axes = shape.size();
    std::vector<unsigned> k(axes, 0);
    size_t flat = 0;
    while (true) {
        if (newton_coeffs[flat] != 0) {
            // expand prod_a N_{k_a}(x_a) into the monomial map
            std::vector<unsigned> e(axes, 0);
            auto rec = [&](auto&& self, size_t axis, Rational acc) -> void {
                if (axis == axes) {
                    Rational& slot = poly.coeffs[e];
                    slot += acc * newton_coeffs[flat];
                    if (slot == 0) poly.coeffs.erase(e);
                    return;
                }
                for (unsigned i = 0; i <= k[axis]; ++i) {
                    if (basis[k[axis]][i] == 0) continue;
                    e[axis] = i;
                    self(self, axis + 1, acc * basis[k[axis]][i]);
                }
                e[axis] = 0;
            };
            rec(rec, 0, 1);
        }
        size_t axis = axes;
        bool advanced = false;
        ++flat;
        while (axis > 0) {
            --axis;
            if (k[axis] < shape[axis]) {
                ++k[axis];
                for (size_t j = axis + 1; j < axes; ++j) k[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return poly;
}

} // namespace

std::optional<NumericalPolynomial> fit_polynomial(const LengthTable& table, unsigned max_degree,
                                                  std::optional<Expo> n0_opt) {
    const Expo n0 = n0_opt.value_or(max_degree + 1);
    const size_t r = static_cast<size_t>(table.r);

    std::vector<MultiIndex> eventual;
    for (const MultiIndex& n : table.domain) {
        bool in_regime = std::all_of(n.begin(), n.end(), [&](Expo e) { return e >= n0; });
        if (!in_regime) continue;
        if (table.values.at(n).infinite)
            fail(ErrKind::precondition, "fit_polynomial: infinite value inside the fit window");
        eventual.push_back(n);
    }
    if (eventual.empty())
        fail(ErrKind::precondition, "fit_polynomial: no grid points with all coordinates >= " +
                                        std::to_string(n0));

    Expo n2 = 0;
    for (size_t a = 0; a < r; ++a) {
        Expo axis_max = 0;
        for (const MultiIndex& n : eventual) axis_max = std::max(axis_max, n[a]);
        n2 = (a == 0) ? axis_max : std::min(n2, axis_max);
    }
    const Expo needed = n0 + 2 * max_degree + 2;
    if (n2 < needed)
        fail(ErrKind::precondition,
             "fit_polynomial: grid too small, need the full sub-grid [" + std::to_string(n0) +
                 "," + std::to_string(needed) + "]^r");
    std::vector<std::pair<Expo, Expo>> box(r, {n0, n2});
    for (const MultiIndex& n : grid_points(box)) {
        auto it = table.values.find(n);
        if (it == table.values.end() || it->second.infinite)
            fail(ErrKind::precondition,
                 "fit_polynomial: table is not finite on the full sub-grid");
    }

    // tensor Newton divided differences on [n0, n0+max_degree]^r
    const unsigned depth = max_degree;
    std::vector<unsigned> shape(r, depth);
    size_t cells = 1;
    for (size_t a = 0; a < r; ++a) cells *= depth + 1;
    std::vector<size_t> strides(r, 1);
    for (size_t a = r; a-- > 0;) {
        strides[a] = (a + 1 == r) ? 1 : strides[a + 1] * (depth + 1);
    }
    std::vector<Rational> work(cells);
    {
        MultiIndex probe(r);
        for (size_t cell = 0; cell < cells; ++cell) {
            size_t rest = cell;
            for (size_t a = 0; a < r; ++a) {
                probe[a] = n0 + static_cast<Expo>(rest / strides[a]);
                rest %= strides[a];
            }
            work[cell] = Rational(table.values.at(probe).count);
        }
    }
    for (size_t a = 0; a < r; ++a) {
        // divided differences along axis a for every line (unit-spaced nodes)
        for (size_t base = 0; base < cells; ++base) {
            size_t coord = (base / strides[a]) % (depth + 1);
            if (coord != 0) continue;
            for (unsigned level = 1; level <= depth; ++level)
                for (unsigned i = depth; i >= level; --i) {
                    size_t hi = base + i * strides[a];
                    size_t lo = hi - strides[a];
                    work[hi] = (work[hi] - work[lo]) / level;
                }
        }
    }
    std::vector<Rational> nodes;
    for (unsigned i = 0; i < depth; ++i) nodes.emplace_back(n0 + i);
    NumericalPolynomial poly =
        expand_from_newton(static_cast<int>(r), shape, work, newton_basis(nodes));

    if (poly.total_degree() > max_degree) return std::nullopt;
    for (const MultiIndex& n : eventual) {
        bool interior = std::all_of(n.begin(), n.end(),
                                    [&](Expo e) { return e <= n0 + depth; });
        if (interior) continue;
        if (poly.eval(n) != Rational(table.values.at(n).count)) return std::nullopt;
    }
    return poly;
}

unsigned QuasiPolynomial::degree() const {
    unsigned deg = 0;
    for (const NumericalPolynomial& p : classes) deg = std::max(deg, p.total_degree());
    return deg;
}

Rational QuasiPolynomial::eval(std::uint64_t t) const {
    const NumericalPolynomial& p = classes[t % period];
    return p.eval({static_cast<Expo>(t)});
}

std::string QuasiPolynomial::to_json() const {
    std::ostringstream out;
    out << "{\"period\":" << period << ",\"degree\":" << degree() << ",\"classes\":[";
    for (size_t c = 0; c < classes.size(); ++c) {
        if (c) out << ",";
        out << classes[c].to_json("t");
    }
    out << "]}";
    return out.str();
}

std::optional<QuasiPolynomial>
fit_quasipolynomial_ray(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples,
                        unsigned max_period, unsigned max_degree, std::uint64_t t_start) {
    if (max_period < 1) fail(ErrKind::precondition, "fit_quasipolynomial_ray: period >= 1");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (const auto& s : samples)
        if (s.first >= t_start) pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    const std::uint64_t required =
        static_cast<std::uint64_t>(max_degree + 2) * static_cast<std::uint64_t>(max_period);
    if (pts.size() < required)
        fail(ErrKind::precondition, "fit_quasipolynomial_ray: need at least " +
                                        std::to_string(required) + " samples past the offset");

    for (unsigned p = 1; p <= max_period; ++p) {
        std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> classes(p);
        for (const auto& s : pts) classes[s.first % p].push_back(s);
        bool ok = true;
        std::vector<NumericalPolynomial> fits(p);
        for (unsigned c = 0; c < p && ok; ++c) {
            const auto& cls = classes[c];
            if (cls.size() < static_cast<size_t>(max_degree) + 2) {
                ok = false;
                break;
            }
            // Newton through the first max_degree+1 points, general nodes
            const unsigned depth = max_degree;
            std::vector<Rational> nodes, values;
            for (unsigned i = 0; i <= depth; ++i) {
                nodes.emplace_back(BigInt(cls[i].first));
                values.emplace_back(BigInt(cls[i].second));
            }
            for (unsigned level = 1; level <= depth; ++level)
                for (unsigned i = depth; i >= level; --i)
                    values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
            nodes.pop_back();
            fits[c] = expand_from_newton(1, {depth}, values, newton_basis(nodes));
            for (size_t i = depth + 1; i < cls.size(); ++i) {
                if (fits[c].eval({static_cast<Expo>(cls[i].first)}) !=
                    Rational(BigInt(cls[i].second))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return QuasiPolynomial{p, std::move(fits)};
    }
    return std::nullopt;
}

bool BoundsReport::all_pass() const {
    return degree_le_dim != CheckStatus::fail &&
           degree_le_spread_minus_one != CheckStatus::fail &&
           degree_equals_dim != CheckStatus::fail;
}

std::string BoundsReport::to_text() const {
    auto word = [](CheckStatus s) {
        switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        default: return "N/A";
        }
    };
    std::ostringstream out;
    out << "fit degree: " << fit_degree << "\n";
    out << "spread: " << spread << "\n";
    out << "dim: " << dim << "\n";
    out << "check (a) degree <= dim: " << word(degree_le_dim) << "\n";
    out << "check (b) degree <= spread-1 when spread <= dim-1: "
        << word(degree_le_spread_minus_one) << "\n";
    out << "check (c) degree = dim when spread = dim (trend, not proof): "
        << word(degree_equals_dim) << "\n";
    return out.str();
}

BoundsReport check_bounds(const NumericalPolynomial& fit, unsigned spread, unsigned dim) {
    BoundsReport report;
    report.fit_degree = fit.total_degree();
    report.spread = spread;
    report.dim = dim;
    report.degree_le_dim = report.fit_degree <= dim ? CheckStatus::pass : CheckStatus::fail;
    if (spread <= dim - 1)
        report.degree_le_spread_minus_one =
            report.fit_degree <= spread - 1 ? CheckStatus::pass : CheckStatus::fail;
    if (spread == dim)
        report.degree_equals_dim =
            report.fit_degree == dim ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

} // namespace satrees
