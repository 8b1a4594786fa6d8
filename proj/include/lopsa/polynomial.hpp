#pragma once

#include "lopsa/conjunct.hpp"
#include "lopsa/rational.hpp"
#include "lopsa/varid.hpp"

#include <map>
#include <string>

namespace lopsa {

// Sparse multilinear polynomial with exact rational coefficients over the
// idempotent ring x^2 = x. Zero coefficients are never stored, so structural
// equality is polynomial identity.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat>;

    Polynomial() = default;

    static Polynomial constant(const Rat& c);
    static Polynomial variable(const VarId& v);
    static Polynomial monomial(Monomial m, const Rat& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t monomial_count() const { return terms_.size(); }

    // Max monomial size; -1 for the zero polynomial.
    int degree() const;

    Rat coeff(const Monomial& m) const;
    Rat constant_term() const { return coeff({}); }

    void add_term(const Monomial& m, const Rat& coeff);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;

    Polynomial scaled(const Rat& c) const;

    bool operator==(const Polynomial&) const = default;

    Rat eval(const Assignment& a) const;

    std::string str() const;

private:
    TermMap terms_;
};

// Multilinear product: monomials multiply by set union.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Expansion of a conjunct: prod positives x * prod negatives (1 - x).
// Exactly 2^{#negatives} monomials; the zero conjunct expands to 0.
Polynomial conjunct_to_poly(const Conjunct& t);

// Substitutes plain variable k by substitution[k-1] throughout p.
// Every plain variable of p must have a substitute; order variables in p are
// rejected (composition replaces an abstract input space wholesale).
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& substitution);

} // namespace lopsa
