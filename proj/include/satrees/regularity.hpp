#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satrees/family.hpp"
#include "satrees/ideal.hpp"

namespace satrees {

/// Nonzero graded Betti numbers of R/I: (homological index, multidegree) -> beta.
/// Every stored multidegree is an lcm of a subset of the minimal generators.
struct BettiTable {
    std::map<std::pair<unsigned, Exponent>, std::uint64_t> beta;

    std::string to_csv() const;
    bool operator==(const BettiTable&) const = default;
};

/// Betti numbers from the Taylor complex, one strand per distinct subset-lcm
/// (exact rational ranks). Guarded at 14 generators: the subset lattice is 2^s.
BettiTable taylor_betti(const MonomialIdeal& ideal);

/// The same Betti numbers from degree-a strands of the Koszul complex over
/// the lcm lattice; each strand has at most 2^d basis elements, so this route
/// scales to large generator counts.
BettiTable koszul_betti(const MonomialIdeal& ideal);

/// Castelnuovo-Mumford regularity of the ideal: max{|a| - k} over nonzero
/// beta_{k,a}(R/I), plus one. The unit ideal has regularity 0 by convention.
unsigned regularity(const MonomialIdeal& ideal);

/// Maximum total degree of a minimal generator.
unsigned d_of(const MonomialIdeal& ideal);

struct LinearBoundRow {
    MultiIndex n;
    unsigned reg_power = 0;
    std::int64_t slope = 0;
    std::int64_t defect = 0;
    bool has_saturation = false;
    unsigned reg_saturation = 0;
    std::int64_t defect_saturation = 0;
    bool has_closure = false;
    unsigned reg_closure = 0;
    std::int64_t defect_closure = 0;
};

struct LinearBoundReport {
    std::vector<LinearBoundRow> rows;
    std::int64_t e_emp = 0; // max power defect - 1
    bool has_saturation = false;
    std::int64_t e_emp_saturation = 0;
    bool has_closure = false;
    std::int64_t e_emp_closure = 0;
    bool defect_stabilized = false; // power defect constant on the top two norm slabs

    std::string to_text() const;
};

/// Defects reg(I^n) - sum n_i d(I_i) over the grid and the empirical constant
/// e_emp = max defect - 1; the same for saturations and integral closures of
/// the powers when requested.
LinearBoundReport linear_bound_check(const IdealFamily& family,
                                     const std::vector<MultiIndex>& grid, bool with_saturation,
                                     bool with_closure = false);

} // namespace satrees
