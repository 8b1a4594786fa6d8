#pragma once

#include "lopsa/dnf.hpp"
#include "lopsa/orders.hpp"

#include <optional>
#include <vector>

namespace lopsa {

// DNF whose terms are all chain terms [[S]]_pi over supports of one uniform
// size k, each containing element 1. Terms are kept as a sorted multiset:
// duplicates are meaningful (they shift orders into higher acceptance
// multiplicity, and the expectation of the DNF counts them).
struct NormalizedDnf {
    int support_size = 1;
    std::vector<CanonicalTerm> terms;

    static NormalizedDnf make(int support_size, std::vector<CanonicalTerm> terms);

    int degree() const { return support_size - 1; }
    Dnf to_dnf() const;
    bool accepts(const TotalOrder& z) const;
    long accepting_terms(const TotalOrder& z) const;

    bool operator==(const NormalizedDnf&) const = default;
};

// Rewrites a conjunct over order variables into a negation-free one satisfied
// by exactly the same total orders: !x(i,j) becomes x(j,i) for i != j,
// diagonal negations drop (always true on orders), a positive diagonal
// collapses to the zero conjunct.
Conjunct eliminate_negations(const Conjunct& t);

// Expands a negation-free conjunct into the chain terms over
// S = support(t) + {1}, padded with the smallest absent elements of [n] up to
// size k: one term per ordering of S consistent with t. The expansion
// partitions t's accepted orders, so satisfaction and expectation carry over
// term by term. Unsatisfiable-by-orders conjuncts expand to the empty list.
std::vector<CanonicalTerm> normalize_term(const Conjunct& t, int k, int n);

struct NormalizeOptions {
    // Force a particular uniform support size (must fit every term).
    std::optional<int> support_size;
    // Pad all the way to 2*degree + 1 rather than the minimal fitting size.
    bool full_padding = false;
};

// Whole-DNF normalization: eliminate negations, expand every term, pad to a
// uniform support size (minimal by default, never beyond 2*deg(W)+1), sort.
// Accepted orders and expectation are preserved exactly.
NormalizedDnf normalize_dnf(const Dnf& w, int n, const NormalizeOptions& opts = {});

// Given pe[W * J] < 0, digs out a single canonical term t = [[T]]_pi with
// 1 in T, pi(1) = 1 and pe[W * t] < 0, following the two-step descent:
// pick a junta conjunct with negative product, expand it over its support
// plus 1, and keep a candidate putting 1 first (candidates putting some
// other element first have nonnegative product against any weakening of the
// minimality axiom, so they are skipped). Returns nullopt when pe[W*J] >= 0.
// |T| <= 2 deg(J) + 1; the trivial junta yields the degree-0 stub [[1]].
std::optional<CanonicalTerm> extract_witness_term(const Dnf& w, const ConicalJunta& j, int n);

// Conjunction of a normalized DNF with a canonical term t = [[T]]_pi*,
// pi*(1) = 1, re-expressed in normalized form: each [[S]]_sigma becomes the
// terms [[S u T]]_pi over orderings pi consistent with both sigma and pi*
// (possibly none), padded back to a uniform size <= |S| + |T|.
// Exactly:  pe[N * t] = pe[N' + 1 - t].
NormalizedDnf merge(const NormalizedDnf& n_dnf, const CanonicalTerm& t, int n);

} // namespace lopsa
