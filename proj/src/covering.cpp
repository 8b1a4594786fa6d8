#include "lopsa/covering.hpp"

#include "lopsa/config.hpp"
#include "lopsa/rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lopsa {

void CoverSet::validate(int n) const {
    if (elements.size() < 2) throw InvalidInputError("cover sets need at least two elements");
    if (!std::is_sorted(elements.begin(), elements.end()) ||
        std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw InvalidInputError("cover set elements must be sorted and distinct");
    if (elements.front() < 1 || elements.back() > n)
        throw InvalidInputError("cover set elements must lie in [n]");
    std::vector<int> check = ordering;
    std::sort(check.begin(), check.end());
    if (check != elements) throw InvalidInputError("ordering must permute the element set");
}

std::vector<TotalOrder> covered(const CoverSet& cs, int n) {
    cs.validate(n);
    return orders_where(
        n, [&cs](const TotalOrder& z) { return restrict_to(z, cs.elements) == cs.ordering; });
}

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
    int c = 0;
    for (std::uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

int first_set(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
    return -1;
}

struct Searcher {
    Searcher(const std::vector<Bits>& cov, const std::vector<std::vector<int>>& cands)
        : coverage(cov), candidates_of(cands) {}

    const std::vector<Bits>& coverage;
    const std::vector<std::vector<int>>& candidates_of; // per universe index
    int max_single = 1;
    long long budget = -1;
    long long nodes = 0;
    bool aborted = false;
    int best = 0;
    std::vector<int> best_sets;
    std::vector<int> chosen;
    std::map<Bits, int> memo;

    void run(const Bits& remaining) {
        if (aborted) return;
        if (budget >= 0 && nodes >= budget) {
            aborted = true;
            return;
        }
        ++nodes;
        int depth = static_cast<int>(chosen.size());
        int rem = popcount(remaining);
        if (rem == 0) {
            if (depth < best) {
                best = depth;
                best_sets = chosen;
            }
            return;
        }
        if (depth + (rem + max_single - 1) / max_single >= best) return;
        auto it = memo.find(remaining);
        if (it != memo.end() && it->second <= depth) return;
        if (memo.size() < (std::size_t{1} << 20)) memo[remaining] = depth;
        int e = first_set(remaining);
        for (int s : candidates_of[static_cast<std::size_t>(e)]) {
            Bits next = remaining;
            for (std::size_t w = 0; w < next.size(); ++w)
                next[w] &= ~coverage[static_cast<std::size_t>(s)][w];
            chosen.push_back(s);
            run(next);
            chosen.pop_back();
            if (aborted) return;
        }
    }
};

} // namespace

CoverResult min_cover(const CoverInstance& inst, long long node_budget, int initial_bound) {
    if (inst.d < 2 || inst.d > inst.n) throw InvalidInputError("cover instances need 2 <= d <= n");
    require_enumerable(inst.n);
    if (inst.universe == CoverUniverse::Term) {
        if (!inst.term) throw InvalidInputError("term universe needs a term");
        for (int e : inst.term->support())
            if (e > inst.n) throw InvalidInputError("term mentions elements above n");
    }

    std::vector<TotalOrder> universe = orders_where(inst.n, [&inst](const TotalOrder& z) {
        switch (inst.universe) {
            case CoverUniverse::Ord: return true;
            case CoverUniverse::OrdStar1: return z.first() != 1;
            case CoverUniverse::Term: return satisfies(z, inst.term->conjunct());
        }
        return false;
    });
    if (universe.empty()) throw InvalidInputError("empty cover universe");

    // Candidate sets in lexicographic (S, sigma) order.
    std::vector<CoverSet> sets;
    std::vector<int> pick;
    auto subsets = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == inst.d) {
            if (!inst.one_in_s || pick.front() == 1)
                for (const std::vector<int>& sigma : orderings_of(pick))
                    sets.push_back(CoverSet{pick, sigma});
            return;
        }
        for (int e = from; e <= inst.n; ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    subsets(subsets, 1);

    std::size_t words = (universe.size() + 63) / 64;
    if (sets.size() * words > (std::size_t{1} << 25))
        throw EnumerationBoundError("cover instance too large for exact search");
    std::vector<Bits> coverage(sets.size(), Bits(words, 0));
    std::vector<std::vector<int>> candidates_of(universe.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
        bool any = false;
        for (std::size_t z = 0; z < universe.size(); ++z)
            if (restrict_to(universe[z], sets[s].elements) == sets[s].ordering) {
                coverage[s][z / 64] |= std::uint64_t{1} << (z % 64);
                candidates_of[z].push_back(static_cast<int>(s));
                any = true;
            }
        (void)any;
    }

    Searcher sr{coverage, candidates_of};
    for (const Bits& c : coverage) sr.max_single = std::max(sr.max_single, popcount(c));
    sr.budget = node_budget;

    // Greedy cover for the initial upper bound.
    {
        Bits remaining(words, std::uint64_t(0));
        for (std::size_t z = 0; z < universe.size(); ++z)
            remaining[z / 64] |= std::uint64_t{1} << (z % 64);
        std::vector<int> greedy;
        while (popcount(remaining) > 0) {
            int best_s = -1, best_gain = 0;
            for (std::size_t s = 0; s < sets.size(); ++s) {
                int gain = 0;
                for (std::size_t w = 0; w < words; ++w)
                    gain += __builtin_popcountll(remaining[w] & coverage[s][w]);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_s = static_cast<int>(s);
                }
            }
            greedy.push_back(best_s);
            for (std::size_t w = 0; w < words; ++w)
                remaining[w] &= ~coverage[static_cast<std::size_t>(best_s)][w];
        }
        sr.best = static_cast<int>(greedy.size());
        sr.best_sets = greedy;
        if (initial_bound >= 0 && initial_bound <= sr.best) {
            sr.best = initial_bound; // only strictly smaller covers are of interest
            sr.best_sets.clear();
        }
    }

    Bits all(words, std::uint64_t(0));
    for (std::size_t z = 0; z < universe.size(); ++z) all[z / 64] |= std::uint64_t{1} << (z % 64);
    sr.run(all);

    CoverResult res;
    res.nodes = sr.nodes;
    res.exact = !sr.aborted;
    res.size = sr.best;
    for (int s : sr.best_sets) res.cover.push_back(sets[static_cast<std::size_t>(s)]);
    return res;
}

bool verify_lower_bound(int n, int d) {
    CoverResult r = min_cover(CoverInstance{n, d, CoverUniverse::OrdStar1, std::nullopt, false});
    return Int(r.size) >= factorial(d);
}

HuntOutcome hunt_sub_factorial(int n, long long node_budget) {
    if (n < 4 || n % 2 != 0) throw InvalidInputError("the hunt needs even n >= 4");
    int d = n / 2;
    Int dfact = factorial(d);
    int bound = static_cast<int>(dfact.get_si());
    CoverResult r = min_cover(CoverInstance{n, d, CoverUniverse::OrdStar1, std::nullopt, false},
                              node_budget, bound);
    HuntOutcome out;
    out.nodes = r.nodes;
    if (!r.cover.empty() && r.size < bound) {
        out.status = HuntOutcome::Status::Found;
        out.cover = r.cover;
        out.size = r.size;
    } else if (r.exact) {
        out.status = HuntOutcome::Status::None;
    } else {
        out.status = HuntOutcome::Status::Unknown;
    }
    return out;
}

} // namespace lopsa
