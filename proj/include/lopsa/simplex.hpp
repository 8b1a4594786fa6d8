#pragma once

#include "lopsa/rational.hpp"

#include <vector>

namespace lopsa {

// Outcome of an exact rational feasibility solve of  A x = b, x >= 0.
// Exactly one of solution / farkas is meaningful, per `feasible`. Both
// certificates are re-verified against (A, b) before returning.
struct SimplexResult {
    bool feasible = false;
    std::vector<Rat> solution; // column values, aligned with the input columns
    std::vector<Rat> farkas;   // row multipliers y with y^T A <= 0 and y^T b > 0
    long long pivots = 0;
};

// Phase-1 simplex over the rationals. `columns[j]` is the j-th column of A,
// each of size b.size(). Dantzig pricing with a Bland fallback after a run
// of degenerate pivots, so the solve always terminates.
SimplexResult solve_feasibility(const std::vector<std::vector<Rat>>& columns,
                                const std::vector<Rat>& b);

} // namespace lopsa
