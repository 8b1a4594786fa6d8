#include "lopsa/conjunct.hpp"

#include <algorithm>

namespace lopsa {

Conjunct Conjunct::zero() {
    Conjunct c;
    c.zero_ = true;
    return c;
}

Conjunct Conjunct::make(std::vector<VarId> pos, std::vector<VarId> neg) {
    canonicalize_monomial(pos);
    canonicalize_monomial(neg);
    Monomial clash;
    std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(),
                          std::back_inserter(clash));
    if (!clash.empty()) return zero();
    Conjunct c;
    c.positives_ = std::move(pos);
    c.negatives_ = std::move(neg);
    return c;
}

bool Conjunct::eval(const Assignment& a) const {
    if (zero_) return false;
    for (const VarId& v : positives_)
        if (!a(v)) return false;
    for (const VarId& v : negatives_)
        if (a(v)) return false;
    return true;
}

Conjunct Conjunct::conjoin(const Conjunct& a, const Conjunct& b) {
    if (a.zero_ || b.zero_) return zero();
    std::vector<VarId> pos = monomial_union(a.positives_, b.positives_);
    std::vector<VarId> neg = monomial_union(a.negatives_, b.negatives_);
    return make(std::move(pos), std::move(neg));
}

Monomial Conjunct::vars() const {
    return monomial_union(positives_, negatives_);
}

std::vector<int> Conjunct::elements() const {
    std::vector<int> out;
    auto add = [&out](const std::vector<VarId>& vs) {
        for (const VarId& v : vs)
            if (v.is_order()) {
                out.push_back(v.i);
                out.push_back(v.j);
            }
    };
    add(positives_);
    add(negatives_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Conjunct::mentions_plain() const {
    auto any_plain = [](const std::vector<VarId>& vs) {
        return std::any_of(vs.begin(), vs.end(), [](const VarId& v) { return v.is_plain(); });
    };
    return any_plain(positives_) || any_plain(negatives_);
}

bool Conjunct::mentions_order() const {
    auto any_order = [](const std::vector<VarId>& vs) {
        return std::any_of(vs.begin(), vs.end(), [](const VarId& v) { return v.is_order(); });
    };
    return any_order(positives_) || any_order(negatives_);
}

std::string Conjunct::str() const {
    if (zero_) return "0";
    if (is_unit()) return "1";
    std::string s;
    for (const VarId& v : positives_) {
        if (!s.empty()) s += "&";
        s += v.str();
    }
    for (const VarId& v : negatives_) {
        if (!s.empty()) s += "&";
        s += "!" + v.str();
    }
    return s;
}

} // namespace lopsa
