#include "lopsa/decision_tree.hpp"

#include "lopsa/config.hpp"

#include <algorithm>
#include <map>

namespace lopsa {

namespace {

int append_subtree(std::vector<DecisionTree::Node>& out,
                   const std::vector<DecisionTree::Node>& src, int idx) {
    const auto& n = src[static_cast<std::size_t>(idx)];
    DecisionTree::Node copy = n;
    if (!n.is_leaf) {
        copy.lo = append_subtree(out, src, n.lo);
        copy.hi = append_subtree(out, src, n.hi);
    }
    out.push_back(copy);
    return static_cast<int>(out.size()) - 1;
}

} // namespace

// Builder shared by compose/graft: emits nodes while tracking the partial
// assignment fixed by the path so far, so no variable repeats on a path.
class TreeBuilder {
public:
    std::vector<DecisionTree::Node> nodes;

    int emit_leaf(int label) {
        nodes.push_back(DecisionTree::Node{true, label, VarId{}, -1, -1});
        return static_cast<int>(nodes.size()) - 1;
    }

    int emit_query(const VarId& v, int lo, int hi) {
        nodes.push_back(DecisionTree::Node{false, 0, v, lo, hi});
        return static_cast<int>(nodes.size()) - 1;
    }

    DecisionTree finish(int root) { return DecisionTree(std::move(nodes), root); }
};

DecisionTree DecisionTree::leaf(int label) {
    return DecisionTree({Node{true, label, VarId{}, -1, -1}}, 0);
}

DecisionTree DecisionTree::query(const VarId& v, const DecisionTree& lo, const DecisionTree& hi) {
    std::vector<Node> nodes;
    int li = append_subtree(nodes, lo.nodes_, lo.root_);
    int hi_i = append_subtree(nodes, hi.nodes_, hi.root_);
    nodes.push_back(Node{false, 0, v, li, hi_i});
    DecisionTree t(std::move(nodes), static_cast<int>(nodes.size()) - 1);
    t.validate();
    return t;
}

DecisionTree DecisionTree::of_conjunct(const Conjunct& t) {
    if (t.is_zero()) return leaf(0);
    DecisionTree acc = leaf(1);
    // Built back to front; each literal guards the rest of the chain.
    Monomial vs = t.vars();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        bool positive = std::binary_search(t.positives().begin(), t.positives().end(), *it);
        acc = positive ? query(*it, leaf(0), acc) : query(*it, acc, leaf(0));
    }
    return acc;
}

int DecisionTree::eval(const Assignment& a) const {
    int idx = root_;
    while (true) {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return n.label;
        idx = a(n.var) ? n.hi : n.lo;
    }
}

int DecisionTree::depth() const {
    // Node count bounds recursion; trees are small throughout.
    std::function<int(int)> go = [&](int idx) -> int {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return 0;
        return 1 + std::max(go(n.lo), go(n.hi));
    };
    return go(root_);
}

bool DecisionTree::is_boolean() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) {
        return !n.is_leaf || n.label == 0 || n.label == 1;
    });
}

std::vector<std::pair<Conjunct, int>> DecisionTree::paths() const {
    std::vector<std::pair<Conjunct, int>> out;
    std::vector<VarId> pos, neg;
    std::function<void(int)> go = [&](int idx) {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.is_leaf) {
            out.emplace_back(Conjunct::make(pos, neg), n.label);
            return;
        }
        neg.push_back(n.var);
        go(n.lo);
        neg.pop_back();
        pos.push_back(n.var);
        go(n.hi);
        pos.pop_back();
    };
    go(root_);
    return out;
}

Monomial DecisionTree::vars() const {
    Monomial out;
    for (const Node& n : nodes_)
        if (!n.is_leaf) out.push_back(n.var);
    canonicalize_monomial(out);
    return out;
}

void DecisionTree::validate() const {
    if (nodes_.empty() || root_ < 0 || root_ >= static_cast<int>(nodes_.size()))
        throw InvalidInputError("decision tree root out of range");
    std::vector<VarId> path;
    std::function<void(int, int)> go = [&](int idx, int depth) {
        if (idx < 0 || idx >= static_cast<int>(nodes_.size()))
            throw InvalidInputError("decision tree child index out of range");
        if (depth > static_cast<int>(nodes_.size()))
            throw InvalidInputError("decision tree contains a cycle");
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return;
        if (std::find(path.begin(), path.end(), n.var) != path.end())
            throw InvalidInputError("variable " + n.var.str() + " queried twice on a path");
        path.push_back(n.var);
        go(n.lo, depth + 1);
        go(n.hi, depth + 1);
        path.pop_back();
    };
    go(root_, 0);
}

std::string DecisionTree::str() const {
    std::function<std::string(int)> go = [&](int idx) -> std::string {
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return std::to_string(n.label);
        return "(" + n.var.str() + " ? " + go(n.hi) + " : " + go(n.lo) + ")";
    };
    return go(root_);
}

Dnf tree_to_dnf(const DecisionTree& t, int label) {
    Dnf d;
    for (const auto& [conj, l] : t.paths())
        if (l == label) d.add(conj);
    return d;
}

Polynomial tree_to_poly(const DecisionTree& t) {
    if (!t.is_boolean())
        throw InvalidInputError("tree_to_poly requires boolean leaves");
    Polynomial p;
    for (const auto& [conj, l] : t.paths())
        if (l == 1) p += conjunct_to_poly(conj);
    return p;
}

namespace {

// Shared recursive grafting core. `decided` carries the path assignment in
// the *target* variable space.
struct Grafter {
    TreeBuilder builder;
    std::map<VarId, bool> decided;

    int copy_with_leaf_hook(const DecisionTree& t, int idx,
                            const std::function<int(Grafter&, int)>& on_leaf) {
        const auto& n = t.nodes()[static_cast<std::size_t>(idx)];
        if (n.is_leaf) return on_leaf(*this, n.label);
        auto it = decided.find(n.var);
        if (it != decided.end())
            return copy_with_leaf_hook(t, it->second ? n.hi : n.lo, on_leaf);
        decided[n.var] = false;
        int lo = copy_with_leaf_hook(t, n.lo, on_leaf);
        decided[n.var] = true;
        int hi = copy_with_leaf_hook(t, n.hi, on_leaf);
        decided.erase(n.var);
        return builder.emit_query(n.var, lo, hi);
    }
};

} // namespace

DecisionTree tree_compose(const DecisionTree& outer, const std::vector<DecisionTree>& inner) {
    for (const DecisionTree& f : inner)
        if (!f.is_boolean())
            throw InvalidInputError("tree_compose requires boolean inner trees");
    Grafter g;
    std::function<int(int)> build_outer = [&](int oidx) -> int {
        const auto& n = outer.nodes()[static_cast<std::size_t>(oidx)];
        if (n.is_leaf) return g.builder.emit_leaf(n.label);
        if (!n.var.is_plain())
            throw InvalidInputError("tree_compose substitutes plain variables only");
        if (n.var.i > static_cast<int>(inner.size()))
            throw InvalidInputError("no inner tree for " + n.var.str());
        const DecisionTree& f = inner[static_cast<std::size_t>(n.var.i) - 1];
        return g.copy_with_leaf_hook(f, f.root(), [&](Grafter&, int bit) {
            return build_outer(bit ? n.hi : n.lo);
        });
    };
    int root = build_outer(outer.root());
    DecisionTree result = g.builder.finish(root);
    result.validate();
    return result;
}

DecisionTree tree_graft(const DecisionTree& base,
                        const std::function<DecisionTree(int)>& replacement) {
    Grafter g;
    int root = g.copy_with_leaf_hook(base, base.root(), [&](Grafter& gr, int label) {
        DecisionTree rep = replacement(label);
        return gr.copy_with_leaf_hook(rep, rep.root(),
                                      [&](Grafter& g2, int l2) { return g2.builder.emit_leaf(l2); });
    });
    DecisionTree result = g.builder.finish(root);
    result.validate();
    return result;
}

} // namespace lopsa
