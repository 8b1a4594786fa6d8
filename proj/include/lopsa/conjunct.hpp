#pragma once

#include "lopsa/varid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lopsa {

using Assignment = std::function<bool(const VarId&)>;

// A conjunction of literals: every positive variable true, every negative
// variable false. Literal lists are sorted and duplicate-free; a variable
// occurring both positively and negatively collapses to the explicit zero
// conjunct (the constant-false term, representable on purpose).
class Conjunct {
public:
    Conjunct() = default; // the empty conjunct, constant 1

    static Conjunct unit() { return Conjunct(); }
    static Conjunct zero();
    static Conjunct make(std::vector<VarId> pos, std::vector<VarId> neg = {});
    static Conjunct positive(std::vector<VarId> pos) { return make(std::move(pos)); }

    bool is_zero() const { return zero_; }
    bool is_unit() const { return !zero_ && positives_.empty() && negatives_.empty(); }

    const std::vector<VarId>& positives() const { return positives_; }
    const std::vector<VarId>& negatives() const { return negatives_; }

    // Number of literals; 0 for the zero conjunct.
    int degree() const { return static_cast<int>(positives_.size() + negatives_.size()); }

    bool negation_free() const { return negatives_.empty(); }

    bool eval(const Assignment& a) const;

    // Conjunction of two conjuncts; zero when they clash on a literal.
    static Conjunct conjoin(const Conjunct& a, const Conjunct& b);

    // All variables mentioned, sorted.
    Monomial vars() const;

    // Order elements mentioned by order variables, sorted, duplicate-free.
    // Plain variables contribute nothing.
    std::vector<int> elements() const;

    bool mentions_plain() const;
    bool mentions_order() const;

    // Comparison orders zero last, then (positives, negatives) lexicographically.
    auto operator<=>(const Conjunct& o) const {
        if (auto c = (zero_ <=> o.zero_); c != 0) return c;
        if (auto c = (positives_ <=> o.positives_); c != 0) return c;
        return negatives_ <=> o.negatives_;
    }
    bool operator==(const Conjunct&) const = default;

    std::string str() const;

private:
    std::vector<VarId> positives_;
    std::vector<VarId> negatives_;
    bool zero_ = false;
};

} // namespace lopsa
