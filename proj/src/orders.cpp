#include "lopsa/orders.hpp"

#include "lopsa/config.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace lopsa {

TotalOrder TotalOrder::of(std::vector<int> seq) {
    int n = static_cast<int>(seq.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int e : seq) {
        if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
            throw InvalidInputError("not a permutation of [n]");
        seen[static_cast<std::size_t>(e)] = true;
    }
    return TotalOrder{std::move(seq)};
}

std::vector<int> TotalOrder::ranks() const {
    std::vector<int> r(seq.size());
    for (int pos = 0; pos < n(); ++pos) r[static_cast<std::size_t>(seq[static_cast<std::size_t>(pos)]) - 1] = pos;
    return r;
}

Assignment TotalOrder::assignment() const {
    auto rank = std::make_shared<std::vector<int>>(ranks());
    int nn = n();
    return [rank, nn](const VarId& v) {
        if (!v.is_order())
            throw InvalidInputError("order assignment queried for plain variable " + v.str());
        if (v.i < 1 || v.i > nn || v.j < 1 || v.j > nn)
            throw InvalidInputError("variable " + v.str() + " outside order universe");
        if (v.i == v.j) return false;
        return (*rank)[static_cast<std::size_t>(v.i) - 1] < (*rank)[static_cast<std::size_t>(v.j) - 1];
    };
}

std::string TotalOrder::str() const {
    std::string s = "(";
    for (int pos = 0; pos < n(); ++pos) {
        if (pos) s += ",";
        s += std::to_string(seq[static_cast<std::size_t>(pos)]);
    }
    return s + ")";
}

namespace {

// Rank lookup over an arbitrary element set; -1 for absent elements.
struct SeqRanks {
    std::vector<int> rank; // indexed by element-1

    explicit SeqRanks(const std::vector<int>& seq) {
        int maxe = 0;
        for (int e : seq) maxe = std::max(maxe, e);
        rank.assign(static_cast<std::size_t>(maxe), -1);
        for (int pos = 0; pos < static_cast<int>(seq.size()); ++pos)
            rank[static_cast<std::size_t>(seq[static_cast<std::size_t>(pos)]) - 1] = pos;
    }

    int of(int e) const {
        if (e < 1 || e > static_cast<int>(rank.size())) return -1;
        return rank[static_cast<std::size_t>(e) - 1];
    }
};

bool eval_on_ranks(const SeqRanks& r, const Conjunct& t, bool strict_membership) {
    if (t.is_zero()) return false;
    auto lit = [&](const VarId& v) -> bool {
        if (!v.is_order())
            throw InvalidInputError("order satisfaction queried for plain variable " + v.str());
        int ri = r.of(v.i), rj = r.of(v.j);
        if (ri < 0 || rj < 0) {
            if (strict_membership)
                throw InvalidInputError("conjunct mentions element outside the sequence");
            return false;
        }
        if (v.i == v.j) return false;
        return ri < rj;
    };
    for (const VarId& v : t.positives())
        if (!lit(v)) return false;
    for (const VarId& v : t.negatives())
        if (lit(v)) return false;
    return true;
}

} // namespace

bool satisfies(const TotalOrder& z, const Conjunct& t) {
    if (t.is_zero()) return false;
    for (const VarId& v : t.vars())
        if (v.is_order() && (v.i < 1 || v.i > z.n() || v.j < 1 || v.j > z.n()))
            throw InvalidInputError("variable " + v.str() + " outside order universe n=" +
                                    std::to_string(z.n()));
    SeqRanks r(z.seq);
    return eval_on_ranks(r, t, true);
}

bool seq_satisfies(const std::vector<int>& seq, const Conjunct& t) {
    SeqRanks r(seq);
    return eval_on_ranks(r, t, true);
}

std::vector<int> restrict_to(const std::vector<int>& seq, const std::vector<int>& S) {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(S.size());
    for (int e : seq)
        if (std::binary_search(sorted.begin(), sorted.end(), e)) out.push_back(e);
    return out;
}

std::vector<int> restrict_to(const TotalOrder& z, const std::vector<int>& S) {
    return restrict_to(z.seq, S);
}

std::vector<int> drop_element(const std::vector<int>& seq, int element) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int e : seq)
        if (e != element) out.push_back(e);
    return out;
}

TotalOrder prepend(std::vector<int> head, const std::vector<int>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return TotalOrder::of(std::move(head));
}

CanonicalTerm CanonicalTerm::of(std::vector<int> order) {
    if (order.empty()) throw InvalidInputError("canonical term needs k >= 1");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInputError("canonical term support must be distinct positive elements");
    return CanonicalTerm{std::move(order)};
}

bool CanonicalTerm::contains(int element) const {
    return std::find(order.begin(), order.end(), element) != order.end();
}

std::vector<int> CanonicalTerm::support() const {
    std::vector<int> s = order;
    std::sort(s.begin(), s.end());
    return s;
}

Conjunct CanonicalTerm::conjunct() const {
    std::vector<VarId> pos;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        pos.push_back(VarId::order(order[i], order[i + 1]));
    return Conjunct::make(std::move(pos));
}

std::string CanonicalTerm::str() const {
    std::string s = "[[";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(order[i]);
    }
    return s + "]]";
}

Int count_consistent(const CanonicalTerm& t, int n) {
    for (int e : t.order)
        if (e > n) throw InvalidInputError("support element exceeds n");
    return factorial(n) / factorial(t.k());
}

void require_enumerable(int n) {
    if (n < 0) throw InvalidInputError("negative order size");
    if (n > config::enum_cap())
        throw EnumerationBoundError("order enumeration bound exceeded: n=" + std::to_string(n) +
                                    " > cap=" + std::to_string(config::enum_cap()));
}

Int count_satisfying(const Conjunct& t, int n) {
    require_enumerable(n);
    if (t.is_zero() || n == 0) return 0;
    for (const VarId& v : t.vars()) {
        if (!v.is_order())
            throw InvalidInputError("order counting over a conjunct with plain variables");
        if (v.i > n || v.j > n)
            throw InvalidInputError("variable " + v.str() + " outside order universe n=" +
                                    std::to_string(n));
    }

    // Block by first element; each block scans (n-1)! orders independently.
    auto count_block = [&t, n](int first) {
        std::vector<int> rest;
        for (int e = 1; e <= n; ++e)
            if (e != first) rest.push_back(e);
        long local = 0;
        std::vector<int> seq(static_cast<std::size_t>(n));
        seq[0] = first;
        do {
            std::copy(rest.begin(), rest.end(), seq.begin() + 1);
            SeqRanks r(seq);
            if (eval_on_ranks(r, t, true)) ++local;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return local;
    };

    int workers = std::min(config::workers(), n);
    Int total = 0;
    if (workers <= 1 || n < 7) {
        for (int first = 1; first <= n; ++first) total += count_block(first);
    } else {
        std::vector<std::future<long>> futs;
        futs.reserve(static_cast<std::size_t>(n));
        for (int first = 1; first <= n; ++first)
            futs.push_back(std::async(std::launch::async, count_block, first));
        for (auto& f : futs) total += f.get();
    }
    return total;
}

void for_each_order(int n, const std::function<void(const TotalOrder&)>& fn) {
    require_enumerable(n);
    if (n == 0) return;
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    do {
        fn(TotalOrder{seq});
    } while (std::next_permutation(seq.begin(), seq.end()));
}

std::vector<TotalOrder> orders_where(int n, const std::function<bool(const TotalOrder&)>& pred) {
    std::vector<TotalOrder> out;
    for_each_order(n, [&](const TotalOrder& z) {
        if (pred(z)) out.push_back(z);
    });
    return out;
}

std::vector<std::vector<int>> orderings_of(std::vector<int> support) {
    std::sort(support.begin(), support.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(support);
    } while (std::next_permutation(support.begin(), support.end()));
    return out;
}

} // namespace lopsa
