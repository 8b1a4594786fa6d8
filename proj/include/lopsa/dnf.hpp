#pragma once

#include "lopsa/conjunct.hpp"
#include "lopsa/polynomial.hpp"

#include <string>
#include <vector>

namespace lopsa {

// A DNF is an ordered list of conjuncts (duplicates allowed; they matter for
// expectation bookkeeping). The empty DNF is constant false.
//
// As a polynomial a DNF D is read as  sum_{t in D} t(x) - 1,  so D holds at x
// exactly when the value is >= 0: the value counts satisfied terms minus one.
class Dnf {
public:
    Dnf() = default;
    explicit Dnf(std::vector<Conjunct> terms) : terms_(std::move(terms)) {}

    const std::vector<Conjunct>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    void add(Conjunct t) { terms_.push_back(std::move(t)); }

    // Max literal count over terms; 0 for the empty DNF.
    int degree() const;

    bool eval(const Assignment& a) const;

    // Number of satisfied terms at the assignment.
    long satisfied_terms(const Assignment& a) const;

    // All variables mentioned, sorted.
    Monomial vars() const;

    // Stable canonical form: terms sorted, duplicates kept.
    Dnf sorted() const;

    bool operator==(const Dnf&) const = default;

    std::string str() const;

private:
    std::vector<Conjunct> terms_;
};

Polynomial dnf_to_poly(const Dnf& d);

// Conical junta: a nonnegative rational combination of conjuncts.
// Canonical form: zero conjuncts dropped, equal conjuncts merged, entries
// sorted; multiplicities strictly positive. Unary juntas (all multiplicities
// integral) are the currency of unary proof size.
class ConicalJunta {
public:
    ConicalJunta() = default; // the zero junta

    static ConicalJunta unit() { return of(Conjunct::unit(), 1); }
    static ConicalJunta of(const Conjunct& t, const Rat& multiplicity);
    static ConicalJunta make(std::vector<std::pair<Conjunct, Rat>> entries);

    const std::vector<std::pair<Conjunct, Rat>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(const Conjunct& t, const Rat& multiplicity);

    // Max conjunct degree; 0 for the zero junta.
    int degree() const;

    bool is_unary() const;

    // Sum of multiplicity * 2^{#negatives} over entries. Requires a unary
    // junta (integral multiplicities).
    Int unary_monomials() const;

    Polynomial to_poly() const;

    Rat eval(const Assignment& a) const;

    Monomial vars() const;

    bool operator==(const ConicalJunta&) const = default;

    std::string str() const;

private:
    std::vector<std::pair<Conjunct, Rat>> entries_;
};

// Pointwise product of a junta with a DNF's term list (not its polynomial):
// every pairwise conjunction, zero products dropped. This is again a conical
// junta; it represents J(x) * #satisfied-terms(x).
ConicalJunta junta_times_terms(const ConicalJunta& j, const Dnf& d);

// Product of two juntas.
ConicalJunta junta_mul(const ConicalJunta& a, const ConicalJunta& b);

} // namespace lopsa
