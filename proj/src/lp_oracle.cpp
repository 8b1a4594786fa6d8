#include "lopsa/lp_oracle.hpp"

#include "lopsa/config.hpp"
#include "lopsa/simplex.hpp"

#include <algorithm>

namespace lopsa {

namespace {

constexpr long long kBasisCap = 5000000;

// Subsets of the universe variables of size <= degree, each plain member
// expanded into both polarities.
void enumerate_basis(const std::vector<VarId>& vars, int degree, bool signs,
                     const std::function<void(const std::vector<VarId>&, unsigned)>& emit) {
    std::vector<std::size_t> pick;
    long long produced = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        std::vector<VarId> chosen;
        chosen.reserve(pick.size());
        for (std::size_t idx : pick) chosen.push_back(vars[idx]);
        unsigned plain_count = 0;
        if (signs)
            for (const VarId& v : chosen)
                if (v.is_plain()) ++plain_count;
        for (unsigned mask = 0; mask < (1u << plain_count); ++mask) {
            if (++produced > kBasisCap)
                throw EnumerationBoundError("junta basis exceeds the enumeration cap");
            emit(chosen, mask);
        }
        if (static_cast<int>(pick.size()) == degree) return;
        for (std::size_t i = from; i < vars.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<VarId> universe_vars(const VarUniverse& u) {
    std::vector<VarId> vars;
    for (int i = 1; i <= u.order_n; ++i)
        for (int j = 1; j <= u.order_n; ++j) vars.push_back(VarId::order(i, j));
    for (int k = 1; k <= u.plain_m; ++k) vars.push_back(VarId::plain(k));
    std::sort(vars.begin(), vars.end());
    return vars;
}

} // namespace

std::vector<Conjunct> junta_basis(const VarUniverse& u, int degree) {
    if (degree < 0) throw InvalidInputError("junta basis needs degree >= 0");
    std::vector<Conjunct> basis;
    enumerate_basis(universe_vars(u), degree, true,
                    [&basis](const std::vector<VarId>& chosen, unsigned mask) {
                        std::vector<VarId> pos, neg;
                        unsigned bit = 0;
                        for (const VarId& v : chosen) {
                            if (v.is_plain() && ((mask >> bit++) & 1))
                                neg.push_back(v);
                            else
                                pos.push_back(v);
                        }
                        basis.push_back(Conjunct::make(pos, neg));
                    });
    return basis;
}

std::vector<Monomial> monomial_basis(const VarUniverse& u, int degree) {
    if (degree < 0) throw InvalidInputError("monomial basis needs degree >= 0");
    std::vector<Monomial> rows;
    enumerate_basis(universe_vars(u), degree, false,
                    [&rows](const std::vector<VarId>& chosen, unsigned) {
                        Monomial m = chosen;
                        canonicalize_monomial(m);
                        rows.push_back(std::move(m));
                    });
    return rows;
}

int product_degree(const Dnf& d, const Conjunct& u) {
    int deg = u.degree();
    for (const Conjunct& t : d.terms()) {
        Conjunct tu = Conjunct::conjoin(t, u);
        if (!tu.is_zero()) deg = std::max(deg, tu.degree());
    }
    return deg;
}

namespace {

std::vector<Rat> poly_column(const Polynomial& p, const std::map<Monomial, std::size_t>& row_of,
                             std::size_t rows) {
    std::vector<Rat> col(rows, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = row_of.find(m);
        if (it == row_of.end()) throw Error("internal: LP column mentions an out-of-basis monomial");
        col[it->second] = c;
    }
    return col;
}

} // namespace

DegreeOracleResult lp_degree_oracle(const AxiomFamily& f, int d) {
    f.validate();
    if (d < 1) throw InvalidInputError("degree oracle needs d >= 1");

    std::vector<Monomial> rows = monomial_basis(f.universe, d);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

    std::vector<Conjunct> basis = junta_basis(f.universe, d);

    std::vector<std::vector<Rat>> columns;
    std::vector<std::pair<std::size_t, Conjunct>> product_meta; // (axiom index, conjunct)
    std::vector<Conjunct> slack_meta;
    for (std::size_t i = 0; i < f.axioms.size(); ++i) {
        const Dnf& axiom = f.axioms[i].second;
        Polynomial axiom_poly = dnf_to_poly(axiom);
        for (const Conjunct& u : basis) {
            if (product_degree(axiom, u) > d) continue;
            Polynomial p = poly_mul(axiom_poly, conjunct_to_poly(u));
            if (p.is_zero()) continue;
            columns.push_back(poly_column(p, row_of, rows.size()));
            product_meta.emplace_back(i, u);
        }
    }
    std::size_t product_cols = columns.size();
    for (const Conjunct& u : basis) {
        columns.push_back(poly_column(conjunct_to_poly(u), row_of, rows.size()));
        slack_meta.push_back(u);
    }

    std::vector<Rat> b(rows.size(), Rat(0));
    b[row_of.at(Monomial{})] = -1;

    SimplexResult lp = solve_feasibility(columns, b);

    DegreeOracleResult res;
    res.pivots = lp.pivots;
    res.lp_rows = rows.size();
    res.lp_cols = columns.size();
    res.feasible = lp.feasible;
    if (lp.feasible) {
        std::vector<ConicalJunta> juntas(f.axioms.size());
        for (std::size_t j = 0; j < product_cols; ++j)
            if (lp.solution[j] > 0)
                juntas[product_meta[j].first].add(product_meta[j].second, lp.solution[j]);
        SAProof proof;
        for (std::size_t i = 0; i < f.axioms.size(); ++i) {
            if (juntas[i].is_zero()) continue;
            proof.weakening.push_back({f.axioms[i].first, f.axioms[i].second});
            proof.juntas.push_back(juntas[i]);
        }
        for (std::size_t j = product_cols; j < columns.size(); ++j)
            if (lp.solution[j] > 0) proof.slack.add(slack_meta[j - product_cols], lp.solution[j]);
        if (!check_sa_proof(f, proof).ok)
            throw Error("internal: LP solution does not verify as a refutation");
        res.refutation = std::move(proof);
    } else {
        std::size_t empty_row = row_of.at(Monomial{});
        Rat scale = lp.farkas[empty_row]; // negative: y^T b = -y_empty > 0
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rat v = lp.farkas[i] / scale;
            res.dual[rows[i]] = v;
        }
        if (!validate_dual(f, d, res.dual))
            throw Error("internal: LP dual fails the pseudo-expectation conditions");
    }
    return res;
}

AxiomFamily extend_with_pool(const AxiomFamily& f, const std::vector<WeakeningEntry>& pool) {
    WeakeningCheck wc = check_weakening(f, pool);
    if (!wc.ok)
        throw InvalidInputError("pool entry is not a weakening of its source axiom (" +
                                wc.witness->str() + ")");
    AxiomFamily ext = f;
    ext.name = f.name + "+pool";
    for (std::size_t i = 0; i < pool.size(); ++i)
        ext.axioms.emplace_back("W" + std::to_string(i) + "(" + pool[i].source + ")",
                                pool[i].dnf);
    ext.validate();
    return ext;
}

DegreeOracleResult sigma2_lp_oracle(const AxiomFamily& f, int d,
                                    const std::vector<WeakeningEntry>& pool) {
    return lp_degree_oracle(extend_with_pool(f, pool), d);
}

bool validate_dual(const AxiomFamily& f, int d, const std::map<Monomial, Rat>& dual) {
    auto value = [&dual](const Polynomial& p) {
        Rat v(0);
        for (const auto& [m, c] : p.terms()) {
            auto it = dual.find(m);
            if (it == dual.end())
                throw InvalidInputError("dual point misses monomial " + monomial_str(m));
            v += c * it->second;
        }
        return v;
    };
    auto it = dual.find(Monomial{});
    if (it == dual.end() || it->second != 1) return false;
    for (const Conjunct& u : junta_basis(f.universe, d)) {
        if (value(conjunct_to_poly(u)) < 0) return false;
        for (const auto& [label, axiom] : f.axioms) {
            (void)label;
            if (product_degree(axiom, u) > d) continue;
            if (value(poly_mul(dnf_to_poly(axiom), conjunct_to_poly(u))) < 0) return false;
        }
    }
    return true;
}

} // namespace lopsa
