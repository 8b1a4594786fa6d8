#pragma once

#include "lopsa/orders.hpp"

#include <optional>
#include <vector>

namespace lopsa {

// C_{S,sigma}: the total orders inducing sigma on S. |S| = d >= 2.
struct CoverSet {
    std::vector<int> elements; // S, sorted
    std::vector<int> ordering; // sigma, a permutation of S

    void validate(int n) const;
};

std::vector<TotalOrder> covered(const CoverSet& cs, int n);

enum class CoverUniverse {
    Ord,      // all n! orders
    OrdStar1, // orders where 1 is not first
    Term,     // orders consistent with a fixed canonical term
};

struct CoverInstance {
    int n = 0;
    int d = 0;
    CoverUniverse universe = CoverUniverse::Ord;
    std::optional<CanonicalTerm> term; // for CoverUniverse::Term
    bool one_in_s = false;             // restrict candidate sets to those containing 1
};

struct CoverResult {
    int size = 0;                // minimum sets needed (best found, if inexact)
    std::vector<CoverSet> cover; // witness; empty when nothing under the initial bound exists
    long long nodes = 0;
    bool exact = true; // false when the node budget cut the search short
};

// Exact minimum cover by branch and bound: branch on the first uncovered
// order over the candidate sets containing it in lexicographic order, prune
// with the counting bound ceil(remaining / max single coverage) and a
// dominance memo on the remaining-universe bitset. `initial_bound` caps the
// search from above: only strictly smaller covers are reported, so callers
// hunting below a threshold pass the threshold here.
CoverResult min_cover(const CoverInstance& inst, long long node_budget = -1,
                      int initial_bound = -1);

// min_cover(Ord^{*1}, d) >= d! at this n. Fails by design when d = n, where
// singleton coverage makes n! - (n-1)! sets suffice.
bool verify_lower_bound(int n, int d);

// Hunts a cover of Ord^{*1} with fewer than d! sets at d = n/2 (even n).
struct HuntOutcome {
    enum class Status { Found, None, Unknown };
    Status status = Status::Unknown;
    std::vector<CoverSet> cover;
    int size = 0;
    long long nodes = 0;
};

HuntOutcome hunt_sub_factorial(int n, long long node_budget = -1);

} // namespace lopsa
