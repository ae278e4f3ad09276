#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satrees/fitting.hpp"
#include "test_util.hpp"

using namespace satrees;

namespace {

LengthTable table_1d(Expo lo, Expo hi, const std::function<std::uint64_t(Expo)>& f) {
    LengthTable t;
    t.r = 1;
    for (Expo n = lo; n <= hi; ++n) {
        t.domain.push_back({n});
        t.values[{n}] = LengthValue::finite(f(n));
    }
    return t;
}

} // namespace

TEST_CASE("fit_polynomial recovers n(n+1)/2") {
    LengthTable t = table_1d(1, 9, [](Expo n) { return std::uint64_t(n) * (n + 1) / 2; });
    auto fit = fit_polynomial(t, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->total_degree() == 2);
    CHECK(fit->coeffs.at({2}) == Rational(1, 2));
    CHECK(fit->coeffs.at({1}) == Rational(1, 2));
    CHECK(fit->coeffs.count({0}) == 0);
    CHECK(fit->to_formula() == "1/2*n^2 + 1/2*n");
    // finite-difference oracle: second differences constant 1, third vanish
    for (Expo n = 1; n <= 6; ++n) {
        auto v = [&](Expo k) { return static_cast<std::int64_t>(t.values.at({k}).count); };
        CHECK(v(n + 2) - 2 * v(n + 1) + v(n) == 1);
        if (n <= 5) CHECK(v(n + 3) - 3 * v(n + 2) + 3 * v(n + 1) - v(n) == 0);
    }
}

TEST_CASE("fit_polynomial constant and reject cases") {
    LengthTable constant = table_1d(1, 9, [](Expo) { return 7; });
    auto fit = fit_polynomial(constant, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->total_degree() == 0);
    CHECK(fit->to_formula() == "7");

    LengthTable doubling = table_1d(1, 12, [](Expo n) { return std::uint64_t(1) << n; });
    CHECK_FALSE(fit_polynomial(doubling, 2).has_value());
    CHECK_FALSE(fit_polynomial(doubling, 3).has_value());

    // grid too small for the margin
    LengthTable tiny = table_1d(1, 5, [](Expo n) { return n; });
    CHECK_THROWS_AS(fit_polynomial(tiny, 2), Error);
}

TEST_CASE("fit_polynomial in two variables") {
    LengthTable t;
    t.r = 2;
    for (Expo a = 1; a <= 8; ++a)
        for (Expo b = 1; b <= 8; ++b) {
            t.domain.push_back({a, b});
            t.values[{a, b}] = LengthValue::finite(std::uint64_t(a) * b + 2 * a + 1);
        }
    auto fit = fit_polynomial(t, 1, 2); // degree budget 1 per total degree? a*b has total degree 2
    CHECK_FALSE(fit.has_value());       // interpolant exceeds the budget
    auto fit2 = fit_polynomial(t, 2, 2);
    REQUIRE(fit2.has_value());
    CHECK(fit2->total_degree() == 2);
    CHECK(fit2->coeffs.at({1, 1}) == 1);
    CHECK(fit2->coeffs.at({1, 0}) == 2);
    CHECK(fit2->coeffs.at({0, 0}) == 1);
    CHECK(fit2->eval({10, 4}) == Rational(10 * 4 + 20 + 1));
}

TEST_CASE("fit respects the start offset") {
    // table that is polynomial only from n = 4 on
    LengthTable t = table_1d(1, 12, [](Expo n) { return n < 4 ? 99 : 3 * std::uint64_t(n); });
    auto fit_from_4 = fit_polynomial(t, 1, 4);
    REQUIRE(fit_from_4.has_value());
    CHECK(fit_from_4->to_formula() == "3*n");
    CHECK_FALSE(fit_polynomial(t, 1, 1).has_value());
}

TEST_CASE("fit_quasipolynomial_ray") {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> square_quarters;
    for (std::uint64_t t = 1; t <= 20; ++t) square_quarters.emplace_back(t, t * t / 4);
    auto fit = fit_quasipolynomial_ray(square_quarters, 3, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->period == 2);
    CHECK(fit->degree() == 2);
    CHECK(fit->classes[0].coeffs.at({2}) == Rational(1, 4));
    CHECK(fit->classes[1].coeffs.at({2}) == Rational(1, 4));
    CHECK(fit->classes[1].coeffs.at({0}) == Rational(-1, 4));
    for (std::uint64_t t = 1; t <= 20; ++t) CHECK(fit->eval(t) == Rational(t * t / 4));

    // a plain polynomial comes back with period 1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> poly;
    for (std::uint64_t t = 1; t <= 12; ++t) poly.emplace_back(t, t * t + 1);
    auto fit1 = fit_quasipolynomial_ray(poly, 3, 2);
    REQUIRE(fit1.has_value());
    CHECK(fit1->period == 1);

    // primes indicator defeats every period
    auto is_prime = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) return false;
        return true;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> primes;
    for (std::uint64_t t = 1; t <= 40; ++t) primes.emplace_back(t, is_prime(t) ? 1 : 0);
    CHECK_FALSE(fit_quasipolynomial_ray(primes, 3, 2).has_value());

    // insufficient samples is a precondition error
    std::vector<std::pair<std::uint64_t, std::uint64_t>> few{{1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(fit_quasipolynomial_ray(few, 2, 2), Error);
}

TEST_CASE("check_bounds") {
    NumericalPolynomial quadratic;
    quadratic.r = 1;
    quadratic.coeffs[{2}] = Rational(1, 2);
    quadratic.coeffs[{1}] = Rational(1, 2);

    BoundsReport at_max = check_bounds(quadratic, 2, 2);
    CHECK(at_max.degree_le_dim == CheckStatus::pass);
    CHECK(at_max.degree_le_spread_minus_one == CheckStatus::not_applicable);
    CHECK(at_max.degree_equals_dim == CheckStatus::pass);
    CHECK(at_max.all_pass());

    NumericalPolynomial constant;
    constant.r = 1;
    BoundsReport small = check_bounds(constant, 1, 2);
    CHECK(small.degree_le_spread_minus_one == CheckStatus::pass);
    CHECK(small.degree_equals_dim == CheckStatus::not_applicable);

    BoundsReport violated = check_bounds(quadratic, 1, 2);
    CHECK(violated.degree_le_spread_minus_one == CheckStatus::fail);
    CHECK_FALSE(violated.all_pass());

    std::string text = at_max.to_text();
    CHECK(text.find("trend, not proof") != std::string::npos);
}

TEST_CASE("numerical polynomial rendering") {
    NumericalPolynomial p;
    p.r = 2;
    p.coeffs[{2, 0}] = Rational(-1, 3);
    p.coeffs[{0, 1}] = 1;
    p.coeffs[{0, 0}] = 4;
    CHECK(p.to_formula() == "-1/3*n1^2 + n2 + 4");
    CHECK(p.to_json() ==
          "{\"vars\":[\"n1\",\"n2\"],\"total_degree\":2,\"terms\":["
          "{\"monomial\":[2,0],\"coefficient\":\"-1/3\"},"
          "{\"monomial\":[0,1],\"coefficient\":\"1\"},"
          "{\"monomial\":[0,0],\"coefficient\":\"4\"}]}");

    NumericalPolynomial zero;
    zero.r = 1;
    CHECK(zero.to_formula() == "0");
}
