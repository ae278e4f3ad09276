#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "satrees/lp.hpp"
#include "satrees/regularity.hpp"
#include "satrees/saturation.hpp"
#include "test_util.hpp"

using namespace satrees;

namespace {

// Independent oracle: Taylor complex tensored down, split only by the total
// degree of the subset lcm (coarser than the multidegree strands).
std::map<std::pair<unsigned, unsigned>, std::uint64_t> coarse_betti(const MonomialIdeal& ideal) {
    const size_t s = ideal.gens.size();
    REQUIRE(s <= 12);
    const size_t subsets = size_t(1) << s;
    std::vector<Exponent> lcm_of(subsets, Exponent(ideal.ring.dim(), 0));
    for (size_t mask = 1; mask < subsets; ++mask) {
        size_t low = mask & (~mask + 1);
        size_t low_index = 0;
        while ((size_t(1) << low_index) != low) ++low_index;
        lcm_of[mask] = lcm_exp(lcm_of[mask ^ low], ideal.gens[low_index]);
    }
    std::map<std::uint64_t, std::vector<size_t>> groups;
    for (size_t mask = 0; mask < subsets; ++mask)
        groups[total_degree(lcm_of[mask])].push_back(mask);

    std::map<std::pair<unsigned, unsigned>, std::uint64_t> betti;
    for (const auto& [deg, members] : groups) {
        std::map<size_t, size_t> position;
        std::vector<std::vector<size_t>> level(s + 1);
        for (size_t mask : members) {
            size_t k = static_cast<size_t>(__builtin_popcountll(mask));
            position[mask] = level[k].size();
            level[k].push_back(mask);
        }
        std::vector<int> rank(s + 2, 0);
        for (size_t k = 1; k <= s; ++k) {
            if (level[k].empty() || level[k - 1].empty()) continue;
            std::vector<std::vector<Rational>> m;
            for (size_t mask : level[k]) {
                std::vector<Rational> col(level[k - 1].size(), 0);
                int sign = 1;
                for (size_t j = 0; j < s; ++j) {
                    if (!(mask & (size_t(1) << j))) continue;
                    size_t smaller = mask ^ (size_t(1) << j);
                    if (lcm_of[smaller] == lcm_of[mask]) col[position.at(smaller)] = sign;
                    sign = -sign;
                }
                m.push_back(std::move(col));
            }
            rank[k] = rank_rational(std::move(m));
        }
        for (size_t k = 0; k <= s; ++k) {
            long long h = static_cast<long long>(level[k].size()) - rank[k] - rank[k + 1];
            REQUIRE(h >= 0);
            if (h > 0)
                betti[{static_cast<unsigned>(k), static_cast<unsigned>(deg)}] =
                    static_cast<std::uint64_t>(h);
        }
    }
    return betti;
}

unsigned reg_from_coarse(const MonomialIdeal& ideal) {
    unsigned best = 0;
    for (const auto& [key, b] : coarse_betti(ideal))
        best = std::max(best, key.second - key.first);
    return best + 1;
}

} // namespace

TEST_CASE("taylor_betti on small ideals") {
    RingCtx kx = tu::ring({"X"});
    BettiTable koszul_one = taylor_betti(tu::ideal(kx, {{2}}));
    CHECK(koszul_one.beta ==
          decltype(koszul_one.beta){{{0, {0}}, 1}, {{1, {2}}, 1}});

    RingCtx kxy = tu::ring({"X", "Y"});
    BettiTable two_vars = taylor_betti(tu::ideal(kxy, {{1, 0}, {0, 1}}));
    CHECK(two_vars.beta == decltype(two_vars.beta){
                               {{0, {0, 0}}, 1},
                               {{1, {0, 1}}, 1},
                               {{1, {1, 0}}, 1},
                               {{2, {1, 1}}, 1},
                           });

    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    MonomialIdeal triangle = tu::ideal(kxyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    BettiTable tri = taylor_betti(triangle);
    CHECK(tri.beta.at({1, {0, 1, 1}}) == 1);
    CHECK(tri.beta.at({1, {1, 0, 1}}) == 1);
    CHECK(tri.beta.at({1, {1, 1, 0}}) == 1);
    CHECK(tri.beta.at({2, {1, 1, 1}}) == 2);
    CHECK(tri.beta.size() == 5); // the four above plus beta_{0,0}

    CHECK_THROWS_AS(taylor_betti(zero_ideal(kx)), Error);
}

TEST_CASE("taylor generator budget") {
    RingCtx kxy = tu::ring({"X", "Y"});
    std::vector<Exponent> staircase;
    for (Expo i = 0; i <= 15; ++i) staircase.push_back({i, 15 - i});
    MonomialIdeal wide = minimalize(kxy, staircase);
    REQUIRE(wide.gens.size() == 16);
    CHECK_THROWS_AS(taylor_betti(wide), Error);
    CHECK(regularity(wide) == 15); // the fast route has no such guard
}

TEST_CASE("regularity") {
    RingCtx kx = tu::ring({"X"});
    for (Expo deg = 1; deg <= 5; ++deg) CHECK(regularity(tu::ideal(kx, {{deg}})) == deg);

    RingCtx kxy = tu::ring({"X", "Y"});
    CHECK(regularity(tu::ideal(kxy, {{1, 0}, {0, 1}})) == 1);

    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    CHECK(regularity(tu::ideal(kxyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);

    CHECK(regularity(unit_ideal(kxy)) == 0);
    CHECK_THROWS_AS(regularity(zero_ideal(kxy)), Error);
}

TEST_CASE("d_of") {
    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    CHECK(d_of(tu::ideal(kxyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
    RingCtx kxy = tu::ring({"X", "Y"});
    CHECK(d_of(tu::ideal(kxy, {{2, 0}, {1, 3}})) == 4);
    CHECK(d_of(unit_ideal(kxy)) == 0);
    CHECK_THROWS_AS(d_of(zero_ideal(kxy)), Error);
}

TEST_CASE("betti routes agree with the coarse oracle") {
    std::mt19937_64 rng(8);
    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    for (int t = 0; t < 30; ++t) {
        MonomialIdeal i = tu::random_ideal(rng, kxyz, 5, 3);
        BettiTable fine = taylor_betti(i);
        CHECK(fine == koszul_betti(i));
        // total-degree aggregation of the fine strands equals the coarse oracle
        std::map<std::pair<unsigned, unsigned>, std::uint64_t> aggregated;
        for (const auto& [key, b] : fine.beta)
            aggregated[{key.first, static_cast<unsigned>(total_degree(key.second))}] += b;
        CHECK(aggregated == coarse_betti(i));
        if (!i.is_unit()) CHECK(regularity(i) == reg_from_coarse(i));
    }
}

TEST_CASE("betti csv") {
    RingCtx kxy = tu::ring({"X", "Y"});
    BettiTable t = taylor_betti(tu::ideal(kxy, {{1, 0}, {0, 1}}));
    CHECK(t.to_csv() == "i,multidegree,beta\n"
                        "0,0:0,1\n"
                        "1,0:1,1\n"
                        "1,1:0,1\n"
                        "2,1:1,1\n");
}

TEST_CASE("linear_bound_check") {
    RingCtx kxy = tu::ring({"X", "Y"});
    // principal ideal: reg(I^n) = n * deg exactly
    IdealFamily principal = make_family({tu::ideal(kxy, {{2, 1}})}, maximal_ideal_gens(kxy));
    LinearBoundReport p = linear_bound_check(principal, {{1}, {2}, {3}}, false);
    for (const LinearBoundRow& row : p.rows) CHECK(row.defect == 0);
    CHECK(p.e_emp == -1);
    CHECK(p.defect_stabilized);

    // family of variable ideals: defect 0 at every grid point
    IdealFamily vars = make_family(
        {tu::ideal(kxy, {{1, 0}}), tu::ideal(kxy, {{0, 1}})}, maximal_ideal_gens(kxy));
    LinearBoundReport v = linear_bound_check(vars, grid_points({{1, 2}, {1, 2}}), false);
    for (const LinearBoundRow& row : v.rows) CHECK(row.defect == 0);

    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    MonomialIdeal triangle =
        minimalize(kxyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    IdealFamily tri = make_family({triangle}, maximal_ideal_gens(kxyz));
    LinearBoundReport r = linear_bound_check(tri, {{1}, {2}, {3}}, true, true);
    CHECK(r.has_saturation);
    CHECK(r.has_closure);
    for (const LinearBoundRow& row : r.rows) {
        CHECK(row.defect <= r.e_emp + 1);
        CHECK(row.defect_saturation <= r.e_emp_saturation + 1);
        CHECK(row.defect_closure <= r.e_emp_closure + 1);
        // the triangle ideal is integrally closed, so the closure column
        // agrees with the power column
        CHECK(row.reg_closure == row.reg_power);
    }
    std::string text = r.to_text();
    CHECK(text.find("e_emp_closure=") != std::string::npos);
}

TEST_CASE("regularity closed forms") {
    RingCtx kxy = tu::ring({"X", "Y"});
    // complete intersection (X^a, Y^b): reg = a + b - 1
    for (Expo a = 1; a <= 4; ++a)
        for (Expo b = 1; b <= 4; ++b)
            CHECK(regularity(tu::ideal(kxy, {{a, 0}, {0, b}})) == a + b - 1);

    // powers of the maximal ideal have linear resolutions: reg(m^a) = a
    for (Expo a = 1; a <= 5; ++a) {
        std::vector<Exponent> gens;
        for (Expo i = 0; i <= a; ++i) gens.push_back({i, a - i});
        CHECK(regularity(minimalize(kxy, gens)) == a);
    }

    // two disjoint quadrics in four variables: a complete intersection
    RingCtx kxyzw = tu::ring({"X", "Y", "Z", "W"});
    CHECK(regularity(tu::ideal(kxyzw, {{1, 0, 1, 0}, {0, 1, 0, 1}})) == 3);
}

TEST_CASE("reg shift under an extra variable") {
    std::mt19937_64 rng(21);
    RingCtx kxy = tu::ring({"X", "Y"});
    RingCtx kxyz = tu::ring({"X", "Y", "Z"});
    for (int t = 0; t < 10; ++t) {
        MonomialIdeal i = tu::random_ideal(rng, kxy, 3, 3);
        if (i.is_unit()) continue;
        std::vector<Exponent> lifted;
        for (const Exponent& g : i.gens) lifted.push_back({g[0], g[1], 1});
        CHECK(regularity(minimalize(kxyz, lifted)) == regularity(i) + 1);
    }
}
