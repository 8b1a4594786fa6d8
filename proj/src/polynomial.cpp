#include "lopsa/polynomial.hpp"

#include "lopsa/config.hpp"

namespace lopsa {

Polynomial Polynomial::constant(const Rat& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(const VarId& v) {
    Polynomial p;
    p.add_term({v}, 1);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rat& coeff) {
    canonicalize_monomial(m);
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(m.size()));
    return d;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial p;
    if (c == 0) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Rat Polynomial::eval(const Assignment& a) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        bool on = true;
        for (const VarId& v : m)
            if (!a(v)) {
                on = false;
                break;
            }
        if (on) total += c;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c);
        if (!m.empty()) s += "*" + monomial_str(m);
    }
    return s;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(monomial_union(ma, mb), ca * cb);
    return out;
}

Polynomial conjunct_to_poly(const Conjunct& t) {
    if (t.is_zero()) return Polynomial();
    Polynomial p = Polynomial::constant(1);
    for (const VarId& v : t.positives())
        p = poly_mul(p, Polynomial::variable(v));
    for (const VarId& v : t.negatives())
        p = poly_mul(p, Polynomial::constant(1) - Polynomial::variable(v));
    return p;
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& substitution) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial prod = Polynomial::constant(1);
        for (const VarId& v : m) {
            if (!v.is_plain())
                throw InvalidInputError("compose substitutes plain variables only, got " + v.str());
            if (v.i > static_cast<int>(substitution.size()))
                throw InvalidInputError("no substitute for " + v.str());
            prod = poly_mul(prod, substitution[static_cast<std::size_t>(v.i) - 1]);
        }
        out += prod.scaled(c);
    }
    return out;
}

} // namespace lopsa
