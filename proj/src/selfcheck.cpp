#include "satrees/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "satrees/counting.hpp"
#include "satrees/errors.hpp"
#include "satrees/fitting.hpp"
#include "satrees/geometry.hpp"
#include "satrees/regularity.hpp"
#include "satrees/saturation.hpp"
#include "satrees/workspace.hpp"

namespace satrees {

namespace {

using Rng = std::mt19937_64;

RingCtx ring_of_dim(int d) {
    static const std::vector<std::string> names{"X", "Y", "Z", "W"};
    return RingCtx(std::vector<std::string>(names.begin(), names.begin() + d));
}

MonomialIdeal random_ideal(Rng& rng, const RingCtx& ring, int max_gens, Expo max_expo,
                           bool proper = true) {
    std::uniform_int_distribution<int> ngen(1, max_gens);
    std::uniform_int_distribution<Expo> expo(0, max_expo);
    std::vector<Exponent> gens;
    for (int i = ngen(rng); i > 0; --i) {
        Exponent e(ring.dim());
        bool zero = true;
        for (int j = 0; j < ring.dim(); ++j) {
            e[static_cast<size_t>(j)] = expo(rng);
            if (e[static_cast<size_t>(j)]) zero = false;
        }
        if (zero && proper) e[0] = 1;
        gens.push_back(std::move(e));
    }
    return minimalize(ring, std::move(gens));
}

SparsePoly random_poly(Rng& rng, const RingCtx& ring, int max_terms, Expo max_expo) {
    std::uniform_int_distribution<int> nterm(1, max_terms);
    std::uniform_int_distribution<Expo> expo(0, max_expo);
    std::uniform_int_distribution<int> coeff(-3, 3);
    SparsePoly f = poly_zero(ring);
    for (int i = nterm(rng); i > 0; --i) {
        Exponent e(ring.dim());
        for (int j = 0; j < ring.dim(); ++j) e[static_cast<size_t>(j)] = expo(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        f = add(f, poly_monomial(ring, std::move(e), c));
    }
    if (f.is_zero()) f = poly_monomial(ring, Exponent(ring.dim(), 0), 1);
    return f;
}

// J drawn among: the maximal ideal, a single polynomial, a single monomial.
std::vector<SparsePoly> random_j(Rng& rng, const RingCtx& ring) {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
    case 0: return maximal_ideal_gens(ring);
    case 1: return {random_poly(rng, ring, 3, 2)};
    default: {
        Exponent e(ring.dim(), 0);
        std::uniform_int_distribution<Expo> expo(0, 2);
        bool zero = true;
        for (int j = 0; j < ring.dim(); ++j) {
            e[static_cast<size_t>(j)] = expo(rng);
            if (e[static_cast<size_t>(j)]) zero = false;
        }
        if (zero) e[static_cast<size_t>(ring.dim()) - 1] = 1;
        return {poly_monomial(ring, std::move(e))};
    }
    }
}

Exponent random_point(Rng& rng, int d, Expo max_expo) {
    std::uniform_int_distribution<Expo> expo(0, max_expo);
    Exponent e(static_cast<size_t>(d));
    for (auto& x : e) x = expo(rng);
    return e;
}

struct Runner {
    std::vector<CheckResult>& out;
    std::string suite;

    void operator()(const std::string& name, const std::function<void()>& body) const {
        try {
            body();
            out.push_back({suite, name, true, ""});
        } catch (const std::exception& e) {
            out.push_back({suite, name, false, e.what()});
        }
    }
};

[[noreturn]] void check_failed(const std::string& detail) {
    throw Error(ErrKind::validation, detail);
}

void expect(bool cond, const std::string& detail) {
    if (!cond) check_failed(detail);
}

// ----- ideal-core suite -----

void suite_ideal(std::vector<CheckResult>& out) {
    Runner run{out, "ideal"};

    run("minimalize-idempotent-order-insensitive", [] {
        Rng rng(101);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 100; ++t) {
            std::vector<Exponent> gens;
            for (int i = 0; i < 7; ++i) gens.push_back(random_point(rng, 3, 4));
            MonomialIdeal a = minimalize(ring, gens);
            std::shuffle(gens.begin(), gens.end(), rng);
            expect(minimalize(ring, gens) == a, "order sensitivity");
            expect(minimalize(ring, a.gens) == a, "not idempotent");
        }
    });

    run("membership-matches-definitions", [] {
        Rng rng(102);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 40; ++t) {
            MonomialIdeal a = random_ideal(rng, ring, 4, 3);
            MonomialIdeal b = random_ideal(rng, ring, 3, 3);
            MonomialIdeal prod = multiply(a, b), meet = intersect(a, b), quot = colon(a, b);
            for (int k = 0; k < 15; ++k) {
                Exponent p = random_point(rng, 3, 7);
                bool in_prod = false;
                for (const Exponent& g : a.gens)
                    for (const Exponent& h : b.gens)
                        if (divides(add_exp(g, h), p)) in_prod = true;
                expect(contains(prod, p) == in_prod, "product membership");
                expect(contains(meet, p) == (contains(a, p) && contains(b, p)),
                       "intersection membership");
                bool in_quot = true;
                for (const Exponent& h : b.gens)
                    if (!contains(a, add_exp(p, h))) in_quot = false;
                expect(contains(quot, p) == in_quot, "colon membership");
            }
        }
    });

    run("colon-chain-law", [] {
        Rng rng(103);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 40; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            MonomialIdeal j = random_ideal(rng, ring, 3, 2);
            MonomialIdeal chain = i;
            for (int k = 1; k <= 3; ++k) {
                chain = colon(chain, j);
                expect(chain == colon(i, power(j, static_cast<Expo>(k))), "chain law broken");
            }
        }
    });

    run("decomposition-intersects-exactly", [] {
        Rng rng(104);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 30; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            MonomialIdeal meet = unit_ideal(ring);
            for (const MonomialIdeal& comp : irreducible_decomposition(i))
                meet = intersect(meet, comp);
            expect(meet == i, "components do not intersect to the ideal");
        }
    });

    run("project-laws", [] {
        Rng rng(105);
        RingCtx ring = ring_of_dim(4);
        for (int t = 0; t < 30; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 5, 4);
            std::vector<int> f{0, 2}, g{1}, fg{0, 1, 2};
            expect(project(project(i, f), f) == project(i, f), "projection not idempotent");
            expect(project(i, fg) == project(project(i, f), g), "projection composition");
        }
    });
}

// ----- saturation suite -----

void suite_saturation(std::vector<CheckResult>& out) {
    Runner run{out, "saturation"};

    run("path-equivalence-planned-certified", [] {
        Rng rng(201);
        std::uniform_int_distribution<int> dim(2, 4), arity(1, 3);
        int done = 0;
        while (done < 200) {
            RingCtx ring = ring_of_dim(dim(rng));
            int r = arity(rng);
            std::vector<MonomialIdeal> members;
            for (int i = 0; i < r; ++i) members.push_back(random_ideal(rng, ring, 3, 2));
            IdealFamily family = make_family(members, random_j(rng, ring));
            SaturationPlan plan = build_plan(family);
            for (const MultiIndex& n : indices_with_norm_up_to(r, 4)) {
                if (norm(n) < 4 && norm(n) % 2 == 0) continue; // thin the grid, keep |n|=4
                expect(saturate_planned(plan, family, n) == saturate_certified(family, n),
                       "planned != certified");
                ++done;
            }
        }
    });

    run("saturation-idempotent-contains", [] {
        Rng rng(202);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 25; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            std::vector<SparsePoly> j = random_j(rng, ring);
            MonomialIdeal sat = saturate_ideal(i, j);
            expect(contains_ideal(sat, i), "I not inside its saturation");
            expect(saturate_ideal(sat, j) == sat, "saturation not idempotent");
        }
    });

    run("double-saturation-identity", [] {
        Rng rng(203);
        std::uniform_int_distribution<int> dim(2, 4), arity(1, 3);
        for (int t = 0; t < 60; ++t) {
            RingCtx ring = ring_of_dim(dim(rng));
            int r = arity(rng);
            std::vector<MonomialIdeal> members;
            for (int i = 0; i < r; ++i) members.push_back(random_ideal(rng, ring, 3, 2));
            IdealFamily family = make_family(members, random_j(rng, ring));
            std::uniform_int_distribution<Expo> entry(0, 2);
            MultiIndex a(static_cast<size_t>(r));
            for (auto& x : a) x = entry(rng);
            expect(double_saturation_check(family, a), "identity failed");
        }
    });

    run("m-saturation-matches-decomposition-route", [] {
        Rng rng(204);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 30; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            MonomialIdeal m = minimalize(ring, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
            MonomialIdeal via_chain = saturate_ideal(i, maximal_ideal_gens(ring));
            expect(via_chain == saturate_via_decomposition(i, m),
                   "chain route != decomposition route");
        }
    });

    run("alpha-linear-bound-and-monotone", [] {
        Rng rng(205);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 8; ++t) {
            IdealFamily family =
                make_family({random_ideal(rng, ring, 3, 2), random_ideal(rng, ring, 3, 2)},
                            random_j(rng, ring));
            AlphaReport report = alpha_stabilization(family, 4);
            std::map<MultiIndex, unsigned> k_of(report.table.begin(), report.table.end());
            for (const auto& [n, k] : report.table) {
                expect(k <= report.alpha_emp * norm(n), "k(n) above alpha_emp * |n|");
                // an observation about the tested instances, not a guarantee
                for (size_t i = 0; i < n.size(); ++i) {
                    MultiIndex up = n;
                    ++up[i];
                    auto it = k_of.find(up);
                    if (it != k_of.end())
                        expect(it->second >= k, "k dropped under n -> n + e_i");
                }
            }
        }
    });
}

// ----- geometry suite -----

void suite_geometry(std::vector<CheckResult>& out) {
    Runner run{out, "geometry"};

    run("closure-contains-and-fixed-point", [] {
        Rng rng(301);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 20; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 4);
            MonomialIdeal closed = integral_closure(i);
            expect(contains_ideal(closed, i), "ideal not inside closure");
            expect(integral_closure(closed) == closed, "closure not a fixed point");
        }
    });

    run("closure-power-containment", [] {
        Rng rng(302);
        RingCtx ring = ring_of_dim(2);
        for (int t = 0; t < 12; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 3, 4);
            MonomialIdeal closed = integral_closure(i);
            for (Expo k = 2; k <= 3; ++k) {
                MonomialIdeal lhs = integral_closure(power(i, k));
                expect(contains_ideal(lhs, power(closed, k)),
                       "closure(I^k) misses closure(I)^k");
            }
        }
    });

    run("spread-range", [] {
        Rng rng(303);
        for (int d = 2; d <= 4; ++d) {
            RingCtx ring = ring_of_dim(d);
            for (int t = 0; t < 10; ++t) {
                MonomialIdeal i = random_ideal(rng, ring, 4, 3);
                if (i.is_unit()) continue;
                unsigned spread = analytic_spread(i);
                expect(1 <= spread && spread <= static_cast<unsigned>(d), "spread out of range");
            }
        }
    });

    run("closure-inclusion-holds", [] {
        Rng rng(304);
        RingCtx ring = ring_of_dim(3);
        int applicable = 0;
        for (int t = 0; t < 60 && applicable < 12; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 3, 3);
            if (i.is_unit()) continue;
            IdealFamily family = make_family({i}, maximal_ideal_gens(ring));
            std::uniform_int_distribution<Expo> np(1, 3);
            Inclusion result = closure_inclusion_check(family, {np(rng)});
            if (result == Inclusion::not_applicable) continue;
            ++applicable;
            expect(result == Inclusion::holds, "saturation escaped the closure");
        }
        expect(applicable > 0, "no applicable instances sampled");
    });

    run("np-membership-monotone", [] {
        Rng rng(306);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 15; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            NewtonPolyhedron np = newton_polyhedron(i);
            for (int k = 0; k < 10; ++k) {
                Exponent p = random_point(rng, 3, 5);
                if (!np_contains(np, p)) continue;
                for (size_t c = 0; c < p.size(); ++c) {
                    Exponent up = p;
                    ++up[c];
                    expect(np_contains(np, up), "membership lost after multiplying by a variable");
                }
            }
        }
    });

    run("newton-vertices-ignore-redundant-generators", [] {
        Rng rng(305);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 20; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            std::vector<Exponent> padded = i.gens;
            for (const Exponent& g : i.gens) padded.push_back(add_exp(g, random_point(rng, 3, 2)));
            MonomialIdeal repadded = minimalize(ring, padded);
            NewtonPolyhedron a = newton_polyhedron(i);
            NewtonPolyhedron b = newton_polyhedron(repadded);
            expect(a.vertices == b.vertices, "vertex set changed under padding");
        }
    });
}

// ----- asymptotics suite -----

void suite_asymptotics(std::vector<CheckResult>& out) {
    Runner run{out, "asymptotics"};

    run("count-quotient-vs-bigger-box", [] {
        Rng rng(401);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 30; ++t) {
            MonomialIdeal inner = random_ideal(rng, ring, 4, 3);
            MonomialIdeal outer = minimalize(
                ring, [&] {
                    std::vector<Exponent> gens = inner.gens;
                    gens.push_back(random_point(rng, 3, 3));
                    return gens;
                }());
            LengthValue counted = count_quotient(outer, inner);
            // brute force over an independently larger box
            Exponent big(3, 0);
            for (const Exponent& g : outer.gens) big = lcm_exp(big, g);
            for (const Exponent& g : inner.gens) big = lcm_exp(big, g);
            for (auto& b : big) b += 3;
            std::uint64_t brute = 0;
            bool any_on_shell = false;
            Exponent cur(3, 0);
            while (true) {
                if (contains(outer, cur) && !contains(inner, cur)) {
                    ++brute;
                    for (size_t i = 0; i < 3; ++i)
                        if (cur[i] == big[i]) any_on_shell = true;
                }
                size_t axis = 3;
                bool advanced = false;
                while (axis > 0) {
                    --axis;
                    if (cur[axis] < big[axis]) {
                        ++cur[axis];
                        for (size_t j = axis + 1; j < 3; ++j) cur[j] = 0;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
            if (counted.infinite)
                expect(any_on_shell, "INFINITE but larger box shows no escape");
            else
                expect(!any_on_shell && brute == counted.count, "count mismatch vs larger box");
        }
    });

    run("torsion-permutation-invariance", [] {
        Rng rng(402);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 6; ++t) {
            std::vector<MonomialIdeal> members{random_ideal(rng, ring, 3, 2),
                                               random_ideal(rng, ring, 3, 2)};
            IdealFamily fam = make_family(members, maximal_ideal_gens(ring));
            IdealFamily swapped =
                make_family({members[1], members[0]}, maximal_ideal_gens(ring));
            std::vector<MultiIndex> grid = grid_points({{1, 3}, {1, 3}});
            LengthTable a = length_table(fam, grid, TableMode::torsion);
            LengthTable b = length_table(swapped, grid, TableMode::torsion);
            for (const MultiIndex& n : grid) {
                MultiIndex m{n[1], n[0]};
                expect(a.values.at(n) == b.values.at(m), "torsion not symmetric");
            }
        }
    });

    run("fit-reproduces-table", [] {
        RingCtx ring = ring_of_dim(2);
        MonomialIdeal i = minimalize(ring, {{2, 0}, {1, 1}});
        IdealFamily fam = make_family({i}, maximal_ideal_gens(ring));
        std::vector<MultiIndex> grid;
        for (Expo n = 1; n <= 10; ++n) grid.push_back({n});
        LengthTable table = length_table(fam, grid, TableMode::torsion);
        auto fit = fit_polynomial(table, 2);
        expect(fit.has_value(), "no fit for a polynomial table");
        for (const MultiIndex& n : grid)
            expect(fit->eval(n) == Rational(table.values.at(n).count),
                   "fit does not reproduce the table");
    });

    run("closed-form-2d-matches-certified", [] {
        Rng rng(404);
        RingCtx ring = ring_of_dim(2);
        std::uniform_int_distribution<int> arity(1, 3);
        for (int t = 0; t < 100; ++t) {
            int r = arity(rng);
            std::vector<MonomialIdeal> members;
            for (int i = 0; i < r; ++i) members.push_back(random_ideal(rng, ring, 5, 6));
            IdealFamily fam = make_family(members, maximal_ideal_gens(ring));
            std::uniform_int_distribution<Expo> entry(1, 5);
            MultiIndex n(static_cast<size_t>(r));
            for (auto& x : n) x = entry(rng);
            expect(closed_form_2d(fam, n) == saturate_certified(fam, n),
                   "closed form != certified saturation");
        }
    });

    run("2var-degree-bound-and-spread1-constant", [] {
        Rng rng(405);
        RingCtx ring = ring_of_dim(2);
        for (int t = 0; t < 10; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 4);
            if (i.is_unit()) continue;
            IdealFamily fam = make_family({i}, maximal_ideal_gens(ring));
            std::vector<MultiIndex> grid;
            for (Expo n = 1; n <= 9; ++n) grid.push_back({n});
            LengthTable table = length_table(fam, grid, TableMode::torsion);
            auto fit = fit_polynomial(table, 2);
            expect(fit.has_value(), "torsion table rejected a degree-2 budget");
            expect(fit->total_degree() <= 2, "degree above the variable count");
            if (analytic_spread(i) == 1)
                expect(fit->total_degree() == 0, "spread-1 table not eventually constant");
        }
    });

    run("quotient-fits-degree-le-d", [] {
        Rng rng(406);
        RingCtx ring = ring_of_dim(2);
        for (int t = 0; t < 8; ++t) {
            // finite colength pair: inner = outer * extra
            MonomialIdeal outer = random_ideal(rng, ring, 3, 2);
            MonomialIdeal extra = minimalize(ring, {{1, 0}, {0, 2}});
            MonomialIdeal inner = multiply(outer, extra);
            IdealFamily fam_inner = make_family({inner}, maximal_ideal_gens(ring));
            IdealFamily fam_outer = make_family({outer}, maximal_ideal_gens(ring));
            std::vector<MultiIndex> grid;
            for (Expo n = 1; n <= 9; ++n) grid.push_back({n});
            LengthTable table =
                length_table(fam_inner, grid, TableMode::quotient, &fam_outer);
            bool finite = true;
            for (const MultiIndex& n : grid)
                if (table.values.at(n).infinite) finite = false;
            if (!finite) continue;
            auto fit = fit_polynomial(table, 2);
            expect(fit.has_value() && fit->total_degree() <= 2,
                   "quotient table failed the dimension degree bound");
        }
    });
}

// ----- regularity suite -----

void suite_regularity(std::vector<CheckResult>& out) {
    Runner run{out, "regularity"};

    run("taylor-koszul-agree", [] {
        Rng rng(501);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 25; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 5, 3);
            expect(taylor_betti(i) == koszul_betti(i), "Betti routes disagree");
        }
    });

    run("reg-permutation-invariance", [] {
        Rng rng(502);
        RingCtx ring = ring_of_dim(3);
        for (int t = 0; t < 15; ++t) {
            MonomialIdeal i = random_ideal(rng, ring, 4, 3);
            if (i.is_unit()) continue;
            std::vector<Exponent> permuted;
            for (const Exponent& g : i.gens) permuted.push_back({g[2], g[0], g[1]});
            MonomialIdeal rotated = minimalize(ring, std::move(permuted));
            expect(regularity(i) == regularity(rotated), "reg not permutation invariant");
        }
    });

    run("reg-extra-variable-shift", [] {
        Rng rng(503);
        RingCtx small = ring_of_dim(2), big = ring_of_dim(3);
        for (int t = 0; t < 12; ++t) {
            MonomialIdeal i = random_ideal(rng, small, 3, 3);
            if (i.is_unit()) continue;
            std::vector<Exponent> lifted;
            for (const Exponent& g : i.gens) lifted.push_back({g[0], g[1], 1});
            MonomialIdeal shifted = minimalize(big, std::move(lifted));
            expect(regularity(shifted) == regularity(i) + 1,
                   "multiplying by a fresh variable did not shift reg by one");
        }
    });

    run("linear-bound-finite-defect", [] {
        RingCtx ring = ring_of_dim(3);
        MonomialIdeal triangle = minimalize(ring, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
        IdealFamily fam = make_family({triangle}, maximal_ideal_gens(ring));
        std::vector<MultiIndex> grid{{1}, {2}, {3}};
        LinearBoundReport report = linear_bound_check(fam, grid, true);
        for (const LinearBoundRow& row : report.rows) {
            expect(row.defect <= report.e_emp + 1, "defect above e_emp+1");
            expect(row.defect_saturation <= report.e_emp_saturation + 1,
                   "saturation defect above its bound");
        }
    });
}

// ----- cli suite -----

void suite_cli(std::vector<CheckResult>& out) {
    Runner run{out, "cli"};

    run("workspace-roundtrip", [] {
        const std::string text = "ring X Y Z\n"
                                 "ideal I = X*Y, Y*Z, X*Z\n"
                                 "ideal K = X^2, X*Y\n"
                                 "poly f = X - Y\n"
                                 "poly g = 1/2*X^2 + 3\n"
                                 "family F = [I] sat m\n"
                                 "family G = [I, K] sat f g\n";
        Workspace ws = parse_workspace_text(text);
        Workspace again = parse_workspace_text(print_workspace(ws));
        expect(ws == again, "round trip changed the workspace");
    });

    run("csv-roundtrip-and-stability", [] {
        RingCtx ring = ring_of_dim(2);
        MonomialIdeal i = minimalize(ring, {{2, 0}, {1, 1}});
        IdealFamily fam = make_family({i}, maximal_ideal_gens(ring));
        std::vector<MultiIndex> grid;
        for (Expo n = 1; n <= 5; ++n) grid.push_back({n});
        LengthTable table = length_table(fam, grid, TableMode::torsion);
        std::ostringstream a, b;
        table.to_csv(a);
        length_table(fam, grid, TableMode::torsion).to_csv(b);
        expect(a.str() == b.str(), "CSV output differs across runs");
        std::istringstream back(a.str());
        LengthTable reread = LengthTable::from_csv(back);
        expect(reread.values == table.values && reread.domain == table.domain,
               "CSV did not round trip");
    });
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite) {
    static const std::map<std::string, void (*)(std::vector<CheckResult>&)> suites{
        {"ideal", suite_ideal},           {"saturation", suite_saturation},
        {"geometry", suite_geometry},     {"asymptotics", suite_asymptotics},
        {"regularity", suite_regularity}, {"cli", suite_cli},
    };
    std::vector<CheckResult> out;
    if (suite == "all") {
        for (const auto& [name, body] : suites) body(out);
        return out;
    }
    auto it = suites.find(suite);
    if (it == suites.end()) fail(ErrKind::usage, "unknown suite '" + suite + "'");
    it->second(out);
    return out;
}

} // namespace satrees
