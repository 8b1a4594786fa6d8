#include "lopsa/dnf.hpp"

#include "lopsa/config.hpp"

#include <algorithm>

namespace lopsa {

int Dnf::degree() const {
    int d = 0;
    for (const Conjunct& t : terms_) d = std::max(d, t.degree());
    return d;
}

bool Dnf::eval(const Assignment& a) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&a](const Conjunct& t) { return t.eval(a); });
}

long Dnf::satisfied_terms(const Assignment& a) const {
    long c = 0;
    for (const Conjunct& t : terms_)
        if (t.eval(a)) ++c;
    return c;
}

Monomial Dnf::vars() const {
    Monomial out;
    for (const Conjunct& t : terms_) out = monomial_union(out, t.vars());
    return out;
}

Dnf Dnf::sorted() const {
    std::vector<Conjunct> ts = terms_;
    std::sort(ts.begin(), ts.end());
    return Dnf(std::move(ts));
}

std::string Dnf::str() const {
    if (terms_.empty()) return "false";
    std::string s;
    for (const Conjunct& t : terms_) {
        if (!s.empty()) s += " | ";
        s += t.str();
    }
    return s;
}

Polynomial dnf_to_poly(const Dnf& d) {
    Polynomial p = Polynomial::constant(-1);
    for (const Conjunct& t : d.terms()) p += conjunct_to_poly(t);
    return p;
}

ConicalJunta ConicalJunta::of(const Conjunct& t, const Rat& multiplicity) {
    ConicalJunta j;
    j.add(t, multiplicity);
    return j;
}

ConicalJunta ConicalJunta::make(std::vector<std::pair<Conjunct, Rat>> entries) {
    ConicalJunta j;
    for (auto& [t, m] : entries) j.add(t, m);
    return j;
}

void ConicalJunta::add(const Conjunct& t, const Rat& multiplicity) {
    if (multiplicity == 0 || t.is_zero()) return;
    if (multiplicity < 0)
        throw InvalidInputError("conical junta multiplicities must be positive");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                               [](const auto& e, const Conjunct& c) { return e.first < c; });
    if (it != entries_.end() && it->first == t)
        it->second += multiplicity;
    else
        entries_.insert(it, {t, multiplicity});
}

int ConicalJunta::degree() const {
    int d = 0;
    for (const auto& [t, m] : entries_) d = std::max(d, t.degree());
    return d;
}

bool ConicalJunta::is_unary() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return rat_is_integer(e.second); });
}

Int ConicalJunta::unary_monomials() const {
    Int total = 0;
    for (const auto& [t, m] : entries_) {
        if (!rat_is_integer(m))
            throw InvalidInputError("unary size undefined for fractional multiplicity " +
                                    rat_to_string(m));
        Int expansion = Int(1) << t.negatives().size();
        total += m.get_num() * expansion;
    }
    return total;
}

Polynomial ConicalJunta::to_poly() const {
    Polynomial p;
    for (const auto& [t, m] : entries_) p += conjunct_to_poly(t).scaled(m);
    return p;
}

Rat ConicalJunta::eval(const Assignment& a) const {
    Rat total = 0;
    for (const auto& [t, m] : entries_)
        if (t.eval(a)) total += m;
    return total;
}

Monomial ConicalJunta::vars() const {
    Monomial out;
    for (const auto& [t, m] : entries_) out = monomial_union(out, t.vars());
    return out;
}

std::string ConicalJunta::str() const {
    if (entries_.empty()) return "0";
    std::string s;
    for (const auto& [t, m] : entries_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(m) + "*(" + t.str() + ")";
    }
    return s;
}

ConicalJunta junta_times_terms(const ConicalJunta& j, const Dnf& d) {
    ConicalJunta out;
    for (const auto& [u, m] : j.entries())
        for (const Conjunct& t : d.terms()) {
            Conjunct prod = Conjunct::conjoin(u, t);
            if (!prod.is_zero()) out.add(prod, m);
        }
    return out;
}

ConicalJunta junta_mul(const ConicalJunta& a, const ConicalJunta& b) {
    ConicalJunta out;
    for (const auto& [u, mu] : a.entries())
        for (const auto& [v, mv] : b.entries()) {
            Conjunct prod = Conjunct::conjoin(u, v);
            if (!prod.is_zero()) out.add(prod, mu * mv);
        }
    return out;
}

} // namespace lopsa
