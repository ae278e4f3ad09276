#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "satrees/counting.hpp"
#include "satrees/saturation.hpp"
#include "test_util.hpp"

using namespace satrees;

TEST_CASE("count_quotient") {
    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    MonomialIdeal triangle = tu::ideal(kxyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    MonomialIdeal sq = power(triangle, 2);
    IdealFamily family = make_family({triangle}, maximal_ideal_gens(kxyz));
    MonomialIdeal sat = saturate_certified(family, {2});
    CHECK(count_quotient(sat, sq) == LengthValue::finite(1)); // only XYZ

    CHECK(count_quotient(sq, sq) == LengthValue::finite(0));

    RingCtx kxy = tu::ring({"X", "Y"});
    CHECK(count_quotient(tu::ideal(kxy, {{1, 0}}), tu::ideal(kxy, {{2, 0}})) ==
          LengthValue::inf());

    CHECK_THROWS_AS(count_quotient(tu::ideal(kxy, {{2, 0}}), tu::ideal(kxy, {{1, 0}})), Error);
}

TEST_CASE("length_table torsion matches the direct-count oracle") {
    RingCtx kxy = tu::ring({"X", "Y"});
    MonomialIdeal i = tu::ideal(kxy, {{2, 0}, {1, 1}});
    IdealFamily family = make_family({i}, maximal_ideal_gens(kxy));
    std::vector<MultiIndex> grid{{1}, {2}, {3}, {4}};
    LengthTable table = length_table(family, grid, TableMode::torsion);

    // independent oracle: saturate((X^2,XY)^n) = (X^n); count points of
    // (X^n) \ I^n directly over a big box
    for (Expo n = 1; n <= 4; ++n) {
        MonomialIdeal in = power(i, n);
        std::uint64_t direct = 0;
        for (Expo a = n; a <= 4 * n; ++a)
            for (Expo b = 0; b <= 4 * n; ++b)
                if (!contains(in, {a, b})) ++direct;
        CHECK(table.values.at({n}) == LengthValue::finite(direct));
        CHECK(direct == n * (n + 1) / 2);
    }
}

TEST_CASE("length_table quotient mode") {
    RingCtx kx = tu::ring({"X"});
    IdealFamily inner = make_family({tu::ideal(kx, {{2}})}, maximal_ideal_gens(kx));
    IdealFamily outer = make_family({tu::ideal(kx, {{1}})}, maximal_ideal_gens(kx));
    std::vector<MultiIndex> grid{{1}, {2}, {3}, {4}};
    LengthTable table = length_table(inner, grid, TableMode::quotient, &outer);
    for (Expo n = 1; n <= 4; ++n)
        CHECK(table.values.at({n}) == LengthValue::finite(n)); // X^n .. X^(2n-1)

    // containment precondition
    CHECK_THROWS_AS(length_table(outer, grid, TableMode::quotient, &inner), Error);
}

TEST_CASE("length_table on a principal member is identically zero") {
    RingCtx kxy = tu::ring({"X", "Y"});
    IdealFamily family = make_family({tu::ideal(kxy, {{1, 0}})}, maximal_ideal_gens(kxy));
    std::vector<MultiIndex> grid{{1}, {2}, {3}};
    LengthTable table = length_table(family, grid, TableMode::torsion);
    for (const MultiIndex& n : grid) CHECK(table.values.at(n) == LengthValue::finite(0));
}

TEST_CASE("csv round trip") {
    RingCtx kxy = tu::ring({"X", "Y"});
    IdealFamily fam = make_family(
        {tu::ideal(kxy, {{2, 0}, {1, 1}}), tu::ideal(kxy, {{0, 1}})}, maximal_ideal_gens(kxy));
    LengthTable table = length_table(fam, grid_points({{1, 3}, {1, 2}}), TableMode::torsion);
    std::ostringstream text;
    table.to_csv(text);
    std::istringstream in(text.str());
    LengthTable back = LengthTable::from_csv(in);
    CHECK(back.r == 2);
    CHECK(back.domain == table.domain);
    CHECK(back.values == table.values);

    // INF serialization
    LengthTable with_inf;
    with_inf.r = 1;
    with_inf.domain = {{1}};
    with_inf.values[{1}] = LengthValue::inf();
    std::ostringstream t2;
    with_inf.to_csv(t2);
    CHECK(t2.str() == "n_1,value\n1,INF\n");
    std::istringstream in2(t2.str());
    CHECK(LengthTable::from_csv(in2).values.at({1}) == LengthValue::inf());
}

TEST_CASE("epsilon_estimate") {
    RingCtx kxy = tu::ring({"X", "Y"});
    IdealFamily family = make_family({tu::ideal(kxy, {{2, 0}, {1, 1}})}, maximal_ideal_gens(kxy));
    std::vector<Rational> seq = epsilon_estimate(family, 4);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == Rational(2));
    CHECK(seq[1] == Rational(3, 2));
    CHECK(seq[2] == Rational(4, 3));
    CHECK(seq[3] == Rational(5, 4));

    IdealFamily principal = make_family({tu::ideal(kxy, {{1, 2}})}, maximal_ideal_gens(kxy));
    for (const Rational& v : epsilon_estimate(principal, 3)) CHECK(v == 0);

    IdealFamily max_family = make_family(
        {tu::ideal(kxy, {{1, 0}, {0, 1}})}, maximal_ideal_gens(kxy));
    std::vector<Rational> mseq = epsilon_estimate(max_family, 3);
    CHECK(mseq[2] == Rational(4, 3)); // 2 * (3*4/2) / 9

    // J must be the maximal ideal
    IdealFamily wrong_j =
        make_family({tu::ideal(kxy, {{2, 0}})}, {poly_monomial(kxy, {1, 0})});
    CHECK_THROWS_AS(epsilon_estimate(wrong_j, 2), Error);
}

TEST_CASE("closed_form_2d") {
    RingCtx kxy = tu::ring({"X", "Y"});
    IdealFamily fam = make_family(
        {tu::ideal(kxy, {{2, 0}, {1, 1}}), tu::ideal(kxy, {{0, 1}})}, maximal_ideal_gens(kxy));
    CHECK(closed_form_2d(fam, {3, 2}) == tu::ideal(kxy, {{3, 2}}));

    IdealFamily principal = make_family({tu::ideal(kxy, {{2, 3}})}, maximal_ideal_gens(kxy));
    CHECK(closed_form_2d(principal, {5}) == tu::ideal(kxy, {{10, 15}}));

    IdealFamily max_family = make_family(
        {tu::ideal(kxy, {{1, 0}, {0, 1}})}, maximal_ideal_gens(kxy));
    CHECK(closed_form_2d(max_family, {4}).is_unit());

    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    IdealFamily wrong_dim =
        make_family({tu::ideal(kxyz, {{1, 1, 0}})}, maximal_ideal_gens(kxyz));
    CHECK_THROWS_AS(closed_form_2d(wrong_dim, {1}), Error);
}

TEST_CASE("count_quotient agrees with a larger independent box") {
    std::mt19937_64 rng(55);
    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    for (int t = 0; t < 25; ++t) {
        MonomialIdeal inner = tu::random_ideal(rng, kxyz, 4, 3);
        std::vector<Exponent> widened = inner.gens;
        widened.push_back(tu::random_point(rng, 3, 3));
        MonomialIdeal outer = minimalize(kxyz, widened);
        LengthValue counted = count_quotient(outer, inner);
        Exponent big(3, 0);
        for (const Exponent& g : outer.gens) big = lcm_exp(big, g);
        for (const Exponent& g : inner.gens) big = lcm_exp(big, g);
        for (auto& b : big) b += 2;
        std::uint64_t brute = 0;
        bool escapes = false;
        for (const Exponent& p : tu::box_points(big)) {
            if (contains(outer, p) && !contains(inner, p)) {
                ++brute;
                for (size_t c = 0; c < 3; ++c)
                    if (p[c] == big[c]) escapes = true;
            }
        }
        if (counted.infinite)
            CHECK(escapes);
        else
            CHECK(counted.count == brute);
    }
}
