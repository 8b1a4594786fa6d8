#include "lopsa/varid.hpp"

#include "lopsa/config.hpp"

#include <algorithm>

namespace lopsa {

VarId VarId::order(int i, int j) {
    if (i < 1 || j < 1) throw InvalidInputError("order variable indices are 1-based");
    return VarId{Kind::Order, i, j};
}

VarId VarId::plain(int k) {
    if (k < 1) throw InvalidInputError("plain variable index is 1-based");
    return VarId{Kind::Plain, k, 0};
}

std::string VarId::str() const {
    if (is_order())
        return "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "x" + std::to_string(i);
}

bool VarUniverse::contains(const VarId& v) const {
    if (v.is_order()) return v.i >= 1 && v.i <= order_n && v.j >= 1 && v.j <= order_n;
    return v.i >= 1 && v.i <= plain_m;
}

void VarUniverse::require(const VarId& v) const {
    if (!contains(v))
        throw InvalidInputError("variable " + v.str() + " outside declared universe (n=" +
                                std::to_string(order_n) + ", m=" + std::to_string(plain_m) + ")");
}

void canonicalize_monomial(Monomial& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

Monomial monomial_union(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s += "*";
        s += m[k].str();
    }
    return s;
}

} // namespace lopsa
