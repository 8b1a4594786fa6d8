#pragma once

#include "lopsa/dnf.hpp"

#include <string>
#include <vector>

namespace lopsa {

// Binary decision tree with integer-labeled leaves. Boolean trees label
// leaves 0/1. Invariant (checked by validate): children indices form a tree
// below root and no variable is queried twice on any root-to-leaf path.
class DecisionTree {
public:
    struct Node {
        bool is_leaf = true;
        int label = 0;       // leaf payload
        VarId var;           // internal: queried variable
        int lo = -1, hi = -1; // internal: children for var=false / var=true

        bool operator==(const Node&) const = default;
    };

    DecisionTree() : DecisionTree(leaf(0)) {}

    static DecisionTree leaf(int label);
    static DecisionTree query(const VarId& v, const DecisionTree& lo, const DecisionTree& hi);
    // Tree reading variable v verbatim: leaves 0/1.
    static DecisionTree reader(const VarId& v) { return query(v, leaf(0), leaf(1)); }
    // Tree accepting exactly the assignments satisfying t (queries t's
    // variables in order; the zero conjunct gives the constant-0 tree).
    static DecisionTree of_conjunct(const Conjunct& t);

    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return root_; }
    bool is_constant() const { return nodes_[static_cast<std::size_t>(root_)].is_leaf; }

    int eval(const Assignment& a) const;
    int depth() const;

    // Labels are 0/1 only.
    bool is_boolean() const;

    // Every root-to-leaf path as (path conjunct, leaf label), in left-to-right
    // (var=false first) order. Path conjuncts of one tree are pairwise
    // inconsistent and their indicator sum is the constant 1.
    std::vector<std::pair<Conjunct, int>> paths() const;

    Monomial vars() const;

    void validate() const;

    bool operator==(const DecisionTree&) const = default;

    std::string str() const;

private:
    DecisionTree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {}

    std::vector<Node> nodes_;
    int root_ = 0;

    friend class TreeBuilder;
};

// OR of the path conjuncts carrying the given label.
Dnf tree_to_dnf(const DecisionTree& t, int label);

// Sum of accepting-path conjunct polynomials of a boolean tree; equals the
// tree's 0/1 output as a multilinear polynomial, degree <= depth.
Polynomial tree_to_poly(const DecisionTree& t);

// Substitutes plain variable k of `outer` by the boolean tree inner[k-1].
// Queries already decided on the current path are collapsed, so the result
// again queries every variable at most once per path.
// depth(result) <= depth(outer) * max depth(inner).
DecisionTree tree_compose(const DecisionTree& outer, const std::vector<DecisionTree>& inner);

// Replaces each leaf of `base` by replacement(label), collapsing repeated
// queries along paths.
DecisionTree tree_graft(const DecisionTree& base,
                        const std::function<DecisionTree(int)>& replacement);

} // namespace lopsa
