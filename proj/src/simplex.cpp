#include "lopsa/simplex.hpp"

#include "lopsa/config.hpp"

#include <cstddef>

namespace lopsa {

namespace {

constexpr long long kDegenerateRun = 64; // Dantzig pivots without progress before Bland takes over

} // namespace

SimplexResult solve_feasibility(const std::vector<std::vector<Rat>>& columns,
                                const std::vector<Rat>& b) {
    const std::size_t m = b.size();
    const std::size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != m) throw InvalidInputError("column height does not match b");

    // Rows are flipped up front so the right-hand side is nonnegative; the
    // Farkas vector is flipped back at the end.
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) sign[i] = -1;

    // Tableau: original columns, artificial identity, rhs. Row m carries the
    // reduced costs of phase 1 (minimize the artificial sum); its rhs cell
    // holds minus the objective value.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = width - 1;
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(width, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (columns[j][i] != 0) t[i][j] = sign[i] > 0 ? columns[j][i] : -columns[j][i];
        t[i][n + i] = 1;
        t[i][rhs] = sign[i] > 0 ? b[i] : -b[i];
    }
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= n && j < n + m) continue; // artificial reduced costs start at 0
        Rat s(0);
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    SimplexResult res;
    bool bland = false;
    long long degenerate_run = 0;
    while (true) {
        // Entering column: negative reduced cost among the original columns
        // (artificials never re-enter).
        std::size_t enter = width;
        if (bland) {
            for (std::size_t j = 0; j < n; ++j)
                if (t[m][j] < 0) {
                    enter = j;
                    break;
                }
        } else {
            const Rat* best = nullptr;
            for (std::size_t j = 0; j < n; ++j)
                if (t[m][j] < 0 && (!best || t[m][j] < *best)) {
                    best = &t[m][j];
                    enter = j;
                }
        }
        if (enter == width) break;

        // Ratio test; ties go to the smallest basis index (Bland's leaving rule).
        std::size_t leave = m + 1;
        Rat best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][rhs] / t[i][enter];
            if (leave == m + 1 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m + 1)
            throw Error("internal: phase-1 objective unbounded"); // cannot happen: it is >= 0

        if (best_ratio == 0) {
            if (++degenerate_run >= kDegenerateRun) bland = true;
        } else {
            degenerate_run = 0;
        }

        // Pivot on (leave, enter).
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < width; ++j)
            if (t[leave][j] != 0) t[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
        res.pivots += 1;
    }

    Rat objective = -t[m][rhs];
    if (objective == 0) {
        res.feasible = true;
        res.solution.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.solution[basis[i]] = t[i][rhs];
        for (std::size_t i = 0; i < m; ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < n; ++j)
                if (res.solution[j] != 0 && columns[j][i] != 0) s += res.solution[j] * columns[j][i];
            if (s != b[i]) throw Error("internal: simplex solution fails A x = b");
        }
    } else {
        res.feasible = false;
        res.farkas.assign(m, Rat(0));
        for (std::size_t k = 0; k < m; ++k) {
            Rat yk = Rat(1) - t[m][n + k]; // phase-1 dual read off the artificial reduced cost
            res.farkas[k] = sign[k] > 0 ? yk : -yk;
        }
        Rat yb(0);
        for (std::size_t i = 0; i < m; ++i)
            if (res.farkas[i] != 0 && b[i] != 0) yb += res.farkas[i] * b[i];
        if (yb <= 0) throw Error("internal: Farkas certificate fails y^T b > 0");
        for (std::size_t j = 0; j < n; ++j) {
            Rat ya(0);
            for (std::size_t i = 0; i < m; ++i)
                if (res.farkas[i] != 0 && columns[j][i] != 0) ya += res.farkas[i] * columns[j][i];
            if (ya > 0) throw Error("internal: Farkas certificate fails y^T A <= 0");
        }
    }
    return res;
}

} // namespace lopsa
