#include "lopsa/formulas.hpp"

#include "lopsa/config.hpp"

#include <algorithm>
#include <set>

namespace lopsa {

const Dnf& AxiomFamily::axiom(const std::string& label) const {
    for (const auto& [l, d] : axioms)
        if (l == label) return d;
    throw InvalidInputError("no axiom labeled " + label + " in family " + name);
}

bool AxiomFamily::has_axiom(const std::string& label) const {
    return std::any_of(axioms.begin(), axioms.end(),
                       [&label](const auto& a) { return a.first == label; });
}

int AxiomFamily::max_degree() const {
    int d = 0;
    for (const auto& [l, dnf] : axioms) d = std::max(d, dnf.degree());
    return d;
}

void AxiomFamily::validate() const {
    std::set<std::string> labels;
    for (const auto& [l, dnf] : axioms) {
        if (!labels.insert(l).second)
            throw InvalidInputError("duplicate axiom label " + l);
        for (const Conjunct& t : dnf.terms())
            for (const VarId& v : t.vars()) universe.require(v);
    }
}

std::string lop_m_label(int i) { return "M" + std::to_string(i); }
std::string lop_r_label(int i) { return "R" + std::to_string(i); }
std::string lop_a_label(int i, int j) {
    return "A" + std::to_string(i) + "," + std::to_string(j);
}
std::string lop_t_label(int i, int j, int k) {
    return "T" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}
std::string lop_o_label(int i, int j) {
    return "O" + std::to_string(i) + "," + std::to_string(j);
}

AxiomFamily lop(int n) {
    if (n < 3) throw InvalidInputError("lop needs n >= 3");
    AxiomFamily f;
    f.name = "lop(" + std::to_string(n) + ")";
    f.universe = VarUniverse::orders(n);

    for (int i = 1; i <= n; ++i) {
        Dnf m;
        for (int j = 1; j <= n; ++j)
            if (j != i) m.add(Conjunct::make({VarId::order(j, i)}));
        f.axioms.emplace_back(lop_m_label(i), std::move(m));
    }
    for (int i = 1; i <= n; ++i) {
        Dnf r;
        r.add(Conjunct::make({}, {VarId::order(i, i)}));
        f.axioms.emplace_back(lop_r_label(i), std::move(r));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Dnf a;
            a.add(Conjunct::make({}, {VarId::order(i, j)}));
            a.add(Conjunct::make({}, {VarId::order(j, i)}));
            f.axioms.emplace_back(lop_a_label(i, j), std::move(a));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                Dnf t;
                t.add(Conjunct::make({VarId::order(i, k)}));
                t.add(Conjunct::make({}, {VarId::order(i, j)}));
                t.add(Conjunct::make({}, {VarId::order(j, k)}));
                f.axioms.emplace_back(lop_t_label(i, j, k), std::move(t));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            Dnf o;
            o.add(Conjunct::make({VarId::order(i, j)}));
            o.add(Conjunct::make({}, {VarId::order(i, j)}));
            f.axioms.emplace_back(lop_o_label(i, j), std::move(o));
        }
    f.validate();
    return f;
}

AxiomFamily least_number(int n) {
    if (n < 1) throw InvalidInputError("least_number needs n >= 1");
    AxiomFamily f;
    f.name = "least-number(" + std::to_string(n) + ")";
    f.universe = VarUniverse::plains(n);

    Dnf some_true;
    for (int i = 1; i <= n; ++i) some_true.add(Conjunct::make({VarId::plain(i)}));
    f.axioms.emplace_back("L0", std::move(some_true));

    for (int i = 1; i <= n; ++i) {
        Dnf li;
        li.add(Conjunct::make({}, {VarId::plain(i)}));
        for (int j = 1; j < i; ++j) li.add(Conjunct::make({VarId::plain(j)}));
        f.axioms.emplace_back("L" + std::to_string(i), std::move(li));
    }
    f.validate();
    return f;
}

SAProof least_number_refutation(int n) {
    AxiomFamily f = least_number(n);
    SAProof p;
    for (const auto& [label, dnf] : f.axioms)
        p.weakening.push_back(WeakeningEntry{label, dnf});
    // Coefficient 2^{n-i} on Li telescopes every variable away:
    // (x1+..+xn-1) + sum_i 2^{n-i}(-xi + x1+..+x_{i-1}) = -1.
    p.juntas.push_back(ConicalJunta::unit());
    for (int i = 1; i <= n; ++i) {
        Rat coeff = Rat(Int(1) << (n - i));
        p.juntas.push_back(ConicalJunta::of(Conjunct::unit(), coeff));
    }
    return p;
}

AxiomFamily family_by_name(const std::string& family, int n) {
    if (family == "lop") return lop(n);
    if (family == "least-number") return least_number(n);
    throw InvalidInputError("unknown family '" + family + "' (expected lop | least-number)");
}

} // namespace lopsa
