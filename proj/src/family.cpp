#include "satrees/family.hpp"

#include <algorithm>

namespace satrees {

IdealFamily make_family(std::vector<MonomialIdeal> ideals, std::vector<SparsePoly> j_gens) {
    if (ideals.empty()) fail(ErrKind::domain, "family needs at least one ideal");
    RingCtx ring = ideals[0].ring;
    for (const MonomialIdeal& ideal : ideals)
        detail::require_same_ring(ring, ideal.ring, "make_family");
    for (const SparsePoly& f : j_gens) {
        detail::require_same_ring(ring, f.ring, "make_family");
        if (f.is_zero()) fail(ErrKind::domain, "family: zero polynomial among J generators");
    }
    return IdealFamily{std::move(ring), std::move(ideals), std::move(j_gens)};
}

std::vector<SparsePoly> maximal_ideal_gens(const RingCtx& ring) {
    std::vector<SparsePoly> gens;
    for (int i = 0; i < ring.dim(); ++i) {
        Exponent e(ring.dim(), 0);
        e[static_cast<size_t>(i)] = 1;
        gens.push_back(poly_monomial(ring, std::move(e)));
    }
    return gens;
}

bool j_is_maximal(const IdealFamily& family) {
    return family.j_gens == maximal_ideal_gens(family.ring);
}

std::vector<MultiIndex> grid_points(const std::vector<std::pair<Expo, Expo>>& ranges) {
    std::vector<MultiIndex> out;
    if (ranges.empty()) return out;
    for (const auto& [lo, hi] : ranges)
        if (lo > hi) fail(ErrKind::domain, "grid range with lo > hi");
    MultiIndex cur(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i) cur[i] = ranges[i].first;
    while (true) {
        out.push_back(cur);
        size_t axis = ranges.size();
        while (axis > 0) {
            --axis;
            if (cur[axis] < ranges[axis].second) {
                ++cur[axis];
                for (size_t j = axis + 1; j < ranges.size(); ++j) cur[j] = ranges[j].first;
                break;
            }
            if (axis == 0) return out;
        }
    }
}

std::vector<MultiIndex> indices_with_norm_up_to(int r, Expo bound) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<size_t>(r), 0);
    auto rec = [&](auto&& self, int pos, Expo used) -> void {
        if (pos == r) {
            if (used >= 1) out.push_back(cur);
            return;
        }
        for (Expo v = 0; v + used <= bound; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, used + v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

} // namespace satrees
