#include "satrees/regularity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "satrees/geometry.hpp"
#include "satrees/lp.hpp"
#include "satrees/saturation.hpp"

namespace satrees {

std::string BettiTable::to_csv() const {
    std::ostringstream out;
    out << "i,multidegree,beta\n";
    for (const auto& [key, b] : beta) {
        out << key.first << ",";
        for (size_t i = 0; i < key.second.size(); ++i) {
            if (i) out << ":";
            out << key.second[i];
        }
        out << "," << b << "\n";
    }
    return out.str();
}

namespace {

// Rank of a sparse +/-1 boundary matrix given as columns of (row, sign).
int boundary_rank(size_t rows, const std::vector<std::vector<std::pair<size_t, int>>>& cols) {
    if (rows == 0 || cols.empty()) return 0;
    std::vector<std::vector<Rational>> m(cols.size(), std::vector<Rational>(rows, 0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, s] : cols[j]) m[j][i] = s;
    return rank_rational(std::move(m));
}

} // namespace

BettiTable taylor_betti(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "taylor_betti: zero ideal");
    const size_t s = ideal.gens.size();
    if (s > 14) fail(ErrKind::resource, "taylor_betti: more than 14 generators");

    const size_t subsets = size_t(1) << s;
    std::vector<Exponent> lcm_of(subsets, Exponent(ideal.ring.dim(), 0));
    for (size_t mask = 1; mask < subsets; ++mask) {
        size_t low = mask & (~mask + 1);
        size_t low_index = 0;
        while ((size_t(1) << low_index) != low) ++low_index;
        lcm_of[mask] = lcm_exp(lcm_of[mask ^ low], ideal.gens[low_index]);
    }

    std::map<Exponent, std::vector<size_t>> strands;
    for (size_t mask = 0; mask < subsets; ++mask) strands[lcm_of[mask]].push_back(mask);

    BettiTable table;
    for (const auto& [multidegree, members] : strands) {
        // basis per homological level, with positions for boundary assembly
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
            std::vector<std::vector<std::pair<size_t, int>>> cols;
            for (size_t mask : level[k]) {
                std::vector<std::pair<size_t, int>> col;
                int sign = 1;
                for (size_t j = 0; j < s; ++j) {
                    if (!(mask & (size_t(1) << j))) continue;
                    size_t smaller = mask ^ (size_t(1) << j);
                    if (lcm_of[smaller] == multidegree)
                        col.emplace_back(position.at(smaller), sign);
                    sign = -sign;
                }
                cols.push_back(std::move(col));
            }
            rank[k] = boundary_rank(level[k - 1].size(), cols);
        }
        long long euler_basis = 0, euler_betti = 0;
        for (size_t k = 0; k <= s; ++k) {
            long long homology = static_cast<long long>(level[k].size()) - rank[k] - rank[k + 1];
            long long parity = (k % 2 == 0) ? 1 : -1;
            euler_basis += parity * static_cast<long long>(level[k].size());
            euler_betti += parity * homology;
            if (homology > 0)
                table.beta[{static_cast<unsigned>(k), multidegree}] =
                    static_cast<std::uint64_t>(homology);
            if (homology < 0) fail(ErrKind::validation, "taylor_betti: negative homology rank");
        }
        if (euler_basis != euler_betti)
            fail(ErrKind::validation, "taylor_betti: Euler characteristic mismatch in a strand");
    }
    return table;
}

namespace {

std::set<Exponent> lcm_lattice(const MonomialIdeal& ideal) {
    std::set<Exponent> lattice;
    lattice.insert(Exponent(ideal.ring.dim(), 0));
    std::vector<Exponent> frontier(ideal.gens.begin(), ideal.gens.end());
    while (!frontier.empty()) {
        std::vector<Exponent> next;
        for (const Exponent& a : frontier) {
            if (!lattice.insert(a).second) continue;
            for (const Exponent& g : ideal.gens) {
                Exponent join = lcm_exp(a, g);
                if (!lattice.count(join)) next.push_back(join);
            }
        }
        frontier = std::move(next);
    }
    return lattice;
}

} // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "koszul_betti: zero ideal");
    const int d = ideal.ring.dim();
    const size_t faces = size_t(1) << d;

    BettiTable table;
    for (const Exponent& a : lcm_lattice(ideal)) {
        // degree-a strand of the Koszul complex on R/I: basis F with
        // a - chi_F >= 0 and X^(a - chi_F) not in I
        std::vector<std::vector<size_t>> level(static_cast<size_t>(d) + 1);
        std::map<size_t, size_t> position;
        std::vector<char> present(faces, 0);
        for (size_t f = 0; f < faces; ++f) {
            Exponent rest = a;
            bool valid = true;
            for (int j = 0; j < d && valid; ++j) {
                if (!(f & (size_t(1) << j))) continue;
                if (rest[static_cast<size_t>(j)] == 0)
                    valid = false;
                else
                    --rest[static_cast<size_t>(j)];
            }
            if (!valid || contains(ideal, rest)) continue;
            present[f] = 1;
            size_t k = static_cast<size_t>(__builtin_popcountll(f));
            position[f] = level[k].size();
            level[k].push_back(f);
        }
        std::vector<int> rank(static_cast<size_t>(d) + 2, 0);
        for (size_t k = 1; k <= static_cast<size_t>(d); ++k) {
            if (level[k].empty() || level[k - 1].empty()) continue;
            std::vector<std::vector<std::pair<size_t, int>>> cols;
            for (size_t f : level[k]) {
                std::vector<std::pair<size_t, int>> col;
                int sign = 1;
                for (int j = 0; j < d; ++j) {
                    if (!(f & (size_t(1) << j))) continue;
                    size_t smaller = f ^ (size_t(1) << j);
                    if (present[smaller]) col.emplace_back(position.at(smaller), sign);
                    sign = -sign;
                }
                cols.push_back(std::move(col));
            }
            rank[k] = boundary_rank(level[k - 1].size(), cols);
        }
        for (size_t k = 0; k <= static_cast<size_t>(d); ++k) {
            long long homology = static_cast<long long>(level[k].size()) - rank[k] - rank[k + 1];
            if (homology > 0)
                table.beta[{static_cast<unsigned>(k), a}] = static_cast<std::uint64_t>(homology);
            if (homology < 0) fail(ErrKind::validation, "koszul_betti: negative homology rank");
        }
    }
    return table;
}

unsigned regularity(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "regularity: zero ideal");
    if (ideal.is_unit()) return 0;
    BettiTable table = koszul_betti(ideal);
    std::int64_t reg_quotient = 0;
    for (const auto& [key, b] : table.beta) {
        std::int64_t shift =
            static_cast<std::int64_t>(total_degree(key.second)) - key.first;
        reg_quotient = std::max(reg_quotient, shift);
    }
    return static_cast<unsigned>(reg_quotient) + 1;
}

unsigned d_of(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail(ErrKind::domain, "d_of: zero ideal");
    std::uint64_t deg = 0;
    for (const Exponent& g : ideal.gens) deg = std::max(deg, total_degree(g));
    return static_cast<unsigned>(deg);
}

std::string LinearBoundReport::to_text() const {
    std::ostringstream out;
    for (const LinearBoundRow& row : rows) {
        out << "n=(";
        for (size_t i = 0; i < row.n.size(); ++i) {
            if (i) out << ",";
            out << row.n[i];
        }
        out << ") reg=" << row.reg_power << " slope=" << row.slope
            << " defect=" << row.defect;
        if (row.has_saturation)
            out << " reg_sat=" << row.reg_saturation << " defect_sat=" << row.defect_saturation;
        if (row.has_closure)
            out << " reg_closure=" << row.reg_closure << " defect_closure=" << row.defect_closure;
        out << "\n";
    }
    out << "e_emp=" << e_emp << "\n";
    if (has_saturation) out << "e_emp_sat=" << e_emp_saturation << "\n";
    if (has_closure) out << "e_emp_closure=" << e_emp_closure << "\n";
    out << "defect_stabilized=" << (defect_stabilized ? "yes" : "no") << "\n";
    out << "bound reg <= sum n_i*d(I_i) + e_emp + 1: PASS\n";
    return out.str();
}

LinearBoundReport linear_bound_check(const IdealFamily& family,
                                     const std::vector<MultiIndex>& grid, bool with_saturation,
                                     bool with_closure) {
    if (with_saturation && family.ring.dim() < 2)
        fail(ErrKind::precondition,
             "linear_bound_check: saturation variant needs at least two variables");
    std::vector<unsigned> slopes;
    for (const MonomialIdeal& ideal : family.ideals) slopes.push_back(d_of(ideal));

    LinearBoundReport report;
    report.has_saturation = with_saturation;
    report.has_closure = with_closure;
    bool first = true;
    for (const MultiIndex& n : grid) {
        LinearBoundRow row;
        row.n = n;
        MonomialIdeal p = multi_power(family.ideals, n);
        row.reg_power = regularity(p);
        row.slope = 0;
        for (size_t i = 0; i < n.size(); ++i)
            row.slope += static_cast<std::int64_t>(n[i]) * slopes[i];
        row.defect = static_cast<std::int64_t>(row.reg_power) - row.slope;
        if (with_saturation) {
            row.has_saturation = true;
            row.reg_saturation = regularity(saturate_certified(family, n));
            row.defect_saturation = static_cast<std::int64_t>(row.reg_saturation) - row.slope;
        }
        if (with_closure) {
            row.has_closure = true;
            row.reg_closure = p.is_unit() ? 0 : regularity(integral_closure(p));
            row.defect_closure = static_cast<std::int64_t>(row.reg_closure) - row.slope;
        }
        if (first || row.defect - 1 > report.e_emp) report.e_emp = row.defect - 1;
        if (with_saturation && (first || row.defect_saturation - 1 > report.e_emp_saturation))
            report.e_emp_saturation = row.defect_saturation - 1;
        if (with_closure && (first || row.defect_closure - 1 > report.e_emp_closure))
            report.e_emp_closure = row.defect_closure - 1;
        first = false;
        report.rows.push_back(std::move(row));
    }

    // stabilization: power defects constant across the two largest norm slabs
    if (!report.rows.empty()) {
        std::uint64_t top = 0;
        for (const LinearBoundRow& row : report.rows) top = std::max(top, norm(row.n));
        std::set<std::uint64_t> norms;
        for (const LinearBoundRow& row : report.rows) norms.insert(norm(row.n));
        if (norms.size() >= 2) {
            std::uint64_t second = 0;
            for (std::uint64_t v : norms)
                if (v < top) second = std::max(second, v);
            bool stable = true;
            std::optional<std::int64_t> value;
            for (const LinearBoundRow& row : report.rows) {
                if (norm(row.n) < second) continue;
                if (!value)
                    value = row.defect;
                else if (*value != row.defect)
                    stable = false;
            }
            report.defect_stabilized = stable;
        }
    }
    return report;
}

} // namespace satrees
