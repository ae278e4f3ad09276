#include "satrees/lp.hpp"

#include <algorithm>

#include "satrees/errors.hpp"

namespace satrees {

// Phase-1 simplex on the tableau
//   [ x | slack/surplus | artificial | rhs ],  rhs >= 0 invariant,
// minimizing the sum of artificials. Bland's rule (least-index entering
// column, least-index basic variable on ratio ties) rules out cycling, and
// artificial columns never re-enter once they leave the basis.
bool feasible_nonneg(int nvars, const std::vector<Constraint>& constraints) {
    const int m = static_cast<int>(constraints.size());
    if (m == 0) return true;

    int n_slack = 0;
    for (const Constraint& c : constraints)
        if (c.rel != Rel::eq) ++n_slack;

    const int slack_base = nvars;
    const int art_base = nvars + n_slack;
    const int width = art_base + m + 1; // one artificial per row + rhs column
    const int rhs_col = width - 1;

    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(width, 0));
    std::vector<int> basis(m, -1);
    std::vector<bool> is_artificial(width, false);

    int slack_next = slack_base;
    int art_next = art_base;
    for (int i = 0; i < m; ++i) {
        const Constraint& c = constraints[i];
        if (static_cast<int>(c.coeffs.size()) != nvars)
            fail(ErrKind::dimension, "feasible_nonneg: coefficient width mismatch");
        bool flip = c.rhs < 0;
        for (int j = 0; j < nvars; ++j) T[i][j] = flip ? -c.coeffs[j] : c.coeffs[j];
        T[i][rhs_col] = flip ? -c.rhs : c.rhs;
        Rel rel = c.rel;
        if (flip) rel = (rel == Rel::le) ? Rel::ge : ((rel == Rel::ge) ? Rel::le : Rel::eq);

        if (rel == Rel::le) {
            T[i][slack_next] = 1;
            basis[i] = slack_next++;
        } else if (rel == Rel::ge) {
            T[i][slack_next] = -1;
            ++slack_next;
            T[i][art_next] = 1;
            is_artificial[art_next] = true;
            basis[i] = art_next++;
        } else {
            T[i][art_next] = 1;
            is_artificial[art_next] = true;
            basis[i] = art_next++;
        }
    }

    while (true) {
        // Reduced cost of column j for "minimize sum of basic artificials" is
        // -(sum of T[i][j] over artificial-basic rows); recomputed each round.
        int entering = -1;
        for (int j = 0; j < rhs_col; ++j) {
            if (is_artificial[j]) continue;
            Rational r = 0;
            for (int i = 0; i < m; ++i)
                if (is_artificial[basis[i]]) r += T[i][j];
            if (r > 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) break;

        int leaving = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (T[i][entering] <= 0) continue;
            Rational ratio = T[i][rhs_col] / T[i][entering];
            if (leaving < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        if (leaving < 0)
            fail(ErrKind::validation, "phase-1 simplex: unbounded improving column");

        Rational pivot = T[leaving][entering];
        for (int j = 0; j < width; ++j) T[leaving][j] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leaving || T[i][entering] == 0) continue;
            Rational factor = T[i][entering];
            for (int j = 0; j < width; ++j) T[i][j] -= factor * T[leaving][j];
        }
        basis[leaving] = entering;
    }

    Rational infeasibility = 0;
    for (int i = 0; i < m; ++i)
        if (is_artificial[basis[i]]) infeasibility += T[i][rhs_col];
    return infeasibility == 0;
}

int rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

} // namespace satrees
