#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lopsa {

// A variable is either an order variable x(i,j) -- "element i precedes
// element j", indices 1-based, i == j permitted syntactically -- or a plain
// boolean x(k). Ordering is lexicographic on (kind, i, j) and fixes every
// canonical serialization in the project.
struct VarId {
    enum class Kind : std::uint8_t { Order = 0, Plain = 1 };

    Kind kind = Kind::Order;
    int i = 0; // Order: first element. Plain: index k.
    int j = 0; // Order: second element. Plain: unused (0).

    static VarId order(int i, int j);
    static VarId plain(int k);

    bool is_order() const { return kind == Kind::Order; }
    bool is_plain() const { return kind == Kind::Plain; }
    bool is_diagonal() const { return is_order() && i == j; }

    auto operator<=>(const VarId&) const = default;

    std::string str() const;
};

// Declared variable ranges for one instance. Operations that need a universe
// reject out-of-range variables instead of auto-extending.
struct VarUniverse {
    int order_n = 0; // order variables over [order_n] x [order_n]
    int plain_m = 0; // plain variables x(1..plain_m)

    static VarUniverse orders(int n) { return VarUniverse{n, 0}; }
    static VarUniverse plains(int m) { return VarUniverse{0, m}; }

    bool contains(const VarId& v) const;
    void require(const VarId& v) const; // throws InvalidInputError
};

// Sorted, duplicate-free variable list; the multilinear monomial.
using Monomial = std::vector<VarId>;

// Sorts and deduplicates in place.
void canonicalize_monomial(Monomial& m);

// Union of two canonical monomials (multilinear product x^2 = x).
Monomial monomial_union(const Monomial& a, const Monomial& b);

std::string monomial_str(const Monomial& m);

} // namespace lopsa
