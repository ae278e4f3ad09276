#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satrees/counting.hpp"
#include "satrees/rational.hpp"

namespace satrees {

/// Polynomial with rational coefficients taking integer values on the
/// validated sample points. Exponent tuples have length r.
struct NumericalPolynomial {
    int r = 1;
    std::map<std::vector<unsigned>, Rational> coeffs; // no zero coefficients stored

    unsigned total_degree() const;
    Rational eval(const MultiIndex& n) const;
    // variables n (r = 1) or n1..nr; a nonempty override renames the single variable
    std::string to_formula(const std::string& var = "") const;
    std::string to_json(const std::string& var = "") const;

    bool operator==(const NumericalPolynomial&) const = default;
};

/// Exact interpolation on the lowest sufficient sub-grid of the table, then
/// exact validation on every remaining grid point with coordinates >= n0.
/// n0 defaults to max_degree + 1 ("eventually" starts there). Returns nullopt
/// when validation fails or the interpolant exceeds the degree budget.
std::optional<NumericalPolynomial> fit_polynomial(const LengthTable& table, unsigned max_degree,
                                                  std::optional<Expo> n0 = std::nullopt);

/// Quasi-polynomial in one ray parameter: one polynomial per residue class.
struct QuasiPolynomial {
    unsigned period = 1;
    std::vector<NumericalPolynomial> classes; // indexed by residue
    unsigned degree() const;
    Rational eval(std::uint64_t t) const;
    std::string to_json() const;
};

/// Searches periods 1..max_period; each residue class is interpolated through
/// its first max_degree+1 samples and validated exactly on the rest. Returns
/// the smallest validated period.
std::optional<QuasiPolynomial>
fit_quasipolynomial_ray(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples,
                        unsigned max_period, unsigned max_degree, std::uint64_t t_start = 1);

enum class CheckStatus { pass, fail, not_applicable };

struct BoundsReport {
    unsigned fit_degree = 0;
    unsigned spread = 0;
    unsigned dim = 0;
    CheckStatus degree_le_dim = CheckStatus::pass;
    CheckStatus degree_le_spread_minus_one = CheckStatus::not_applicable;
    CheckStatus degree_equals_dim = CheckStatus::not_applicable;

    bool all_pass() const;
    std::string to_text() const;
};

/// Degree-vs-spread assertions for a validated fit: (a) degree <= dim always,
/// (b) degree <= spread - 1 when spread <= dim - 1, (c) degree = dim when
/// spread = dim (a trend statement at finite grids, not a proof).
BoundsReport check_bounds(const NumericalPolynomial& fit, unsigned spread, unsigned dim);

} // namespace satrees
