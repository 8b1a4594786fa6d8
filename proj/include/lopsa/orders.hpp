#pragma once

#include "lopsa/conjunct.hpp"
#include "lopsa/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lopsa {

// A total order on [n], stored first-to-last: seq = (3,1,2) puts 3 first.
// The induced boolean assignment sets x(i,j) true iff i appears before j;
// diagonal variables x(i,i) are false.
struct TotalOrder {
    std::vector<int> seq;

    static TotalOrder of(std::vector<int> seq); // validates permutation of [n]

    int n() const { return static_cast<int>(seq.size()); }
    int first() const { return seq.front(); }

    // rank[e-1] = position of element e, 0-based.
    std::vector<int> ranks() const;

    Assignment assignment() const;

    bool operator==(const TotalOrder&) const = default;
    auto operator<=>(const TotalOrder&) const = default;

    std::string str() const;
};

// Does the order satisfy the conjunct? Order variables only.
bool satisfies(const TotalOrder& z, const Conjunct& t);

// Same, for an ordering of a subset of elements given as a sequence. Every
// element mentioned by t must occur in seq.
bool seq_satisfies(const std::vector<int>& seq, const Conjunct& t);

// Subsequence of z keeping exactly the elements of S (order preserved).
std::vector<int> restrict_to(const TotalOrder& z, const std::vector<int>& S);
std::vector<int> restrict_to(const std::vector<int>& seq, const std::vector<int>& S);

// z with one element removed.
std::vector<int> drop_element(const std::vector<int>& seq, int element);

// Sequence with elements prepended, e.g. prepend({i,1}, z-without-i).
TotalOrder prepend(std::vector<int> head, const std::vector<int>& tail);

// Chain term [[S]]_pi: support listed in pi's order, distinct elements,
// k >= 1. k = 1 is the degree-0 stub (the empty conjunct with a recorded
// support); it appears as the trivial witness term and in merges.
struct CanonicalTerm {
    std::vector<int> order; // pi(1), pi(2), ..., pi(k)

    static CanonicalTerm of(std::vector<int> order);

    int k() const { return static_cast<int>(order.size()); }
    int degree() const { return k() - 1; }
    bool contains(int element) const;
    std::vector<int> support() const; // sorted

    // x(pi(1),pi(2)) & x(pi(2),pi(3)) & ... ; the empty conjunct for k = 1.
    Conjunct conjunct() const;

    bool operator==(const CanonicalTerm&) const = default;
    auto operator<=>(const CanonicalTerm&) const = default;

    std::string str() const;
};

// Orders on [n] consistent with a chain term: n!/k!, in closed form.
Int count_consistent(const CanonicalTerm& t, int n);

// Orders on [n] satisfying an arbitrary conjunct, by enumeration.
// Requires n <= config::enum_cap(). Splits the scan by first element across
// config::workers() threads; the per-block sums combine in a fixed sequence,
// so results do not depend on the worker count.
Int count_satisfying(const Conjunct& t, int n);

// Lexicographic enumeration of all orders on [n] (1,2,..,n first).
void for_each_order(int n, const std::function<void(const TotalOrder&)>& fn);

// Orders passing the predicate, lexicographic.
std::vector<TotalOrder> orders_where(int n, const std::function<bool(const TotalOrder&)>& pred);

// All k! orderings of the given support, lexicographic.
std::vector<std::vector<int>> orderings_of(std::vector<int> support);

void require_enumerable(int n);

} // namespace lopsa
