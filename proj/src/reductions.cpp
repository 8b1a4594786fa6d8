#include "lopsa/reductions.hpp"

#include "lopsa/config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lopsa {

Assignment plain_assignment(const std::vector<bool>& x) {
    return [x](const VarId& v) {
        if (!v.is_plain() || v.i < 1 || static_cast<std::size_t>(v.i) > x.size())
            throw InvalidInputError("assignment read outside the input bits: " + v.str());
        return static_cast<bool>(x[static_cast<std::size_t>(v.i) - 1]);
    };
}

void SearchProblem::validate() const {
    if (input_bits < 1) throw InvalidInputError("search problem needs at least one input bit");
    if (outputs.empty()) throw InvalidInputError("search problem needs outputs");
    if (witnesses < 1) throw InvalidInputError("search problem needs witnesses");
    std::set<std::string> seen(outputs.begin(), outputs.end());
    if (seen.size() != outputs.size()) throw InvalidInputError("duplicate output labels");
    if (relation.size() != outputs.size())
        throw InvalidInputError("relation rows do not match outputs");
    for (const auto& row : relation) {
        if (static_cast<int>(row.size()) != witnesses)
            throw InvalidInputError("relation row does not match witness count");
        for (const DecisionTree& t : row) {
            t.validate();
            if (!t.is_boolean()) throw InvalidInputError("relation trees must be boolean");
            for (const VarId& v : t.vars())
                if (!v.is_plain() || v.i < 1 || v.i > input_bits)
                    throw InvalidInputError("relation tree reads outside the input bits");
        }
    }
}

bool SearchProblem::solves(const std::vector<bool>& x, int output) const {
    if (output < 0 || static_cast<std::size_t>(output) >= outputs.size())
        throw InvalidInputError("output index out of range");
    Assignment a = plain_assignment(x);
    for (const DecisionTree& t : relation[static_cast<std::size_t>(output)])
        if (t.eval(a) == 0) return false;
    return true;
}

std::optional<int> SearchProblem::solution(const std::vector<bool>& x) const {
    for (std::size_t b = 0; b < outputs.size(); ++b)
        if (solves(x, static_cast<int>(b))) return static_cast<int>(b);
    return std::nullopt;
}

bool SearchProblem::is_total() const {
    if (input_bits > config::exhaustion_cap())
        throw EnumerationBoundError("totality check over " + std::to_string(input_bits) +
                                    " bits exceeds the exhaustion cap");
    std::vector<bool> x(static_cast<std::size_t>(input_bits));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << input_bits); ++bits) {
        for (int k = 0; k < input_bits; ++k) x[static_cast<std::size_t>(k)] = (bits >> k) & 1;
        if (!solution(x)) return false;
    }
    return true;
}

AxiomFamily false_family(const SearchProblem& r, const std::string& name) {
    r.validate();
    AxiomFamily fam;
    fam.name = name;
    fam.universe = VarUniverse::plains(r.input_bits);
    for (std::size_t b = 0; b < r.outputs.size(); ++b) {
        Dnf d;
        for (const DecisionTree& t : r.relation[b]) {
            Dnf zero_paths = tree_to_dnf(t, 0);
            for (const Conjunct& term : zero_paths.terms()) d.add(term);
        }
        fam.axioms.emplace_back(r.outputs[b], std::move(d));
    }
    fam.validate();
    return fam;
}

SearchProblem ff_problem(const AxiomFamily& f) {
    f.validate();
    if (f.universe.order_n != 0)
        throw InvalidInputError("search problems read plain inputs; family " + f.name +
                                " has order variables");
    SearchProblem p;
    p.input_bits = f.universe.plain_m;
    std::size_t max_terms = 1;
    for (const auto& [label, d] : f.axioms) {
        (void)label;
        max_terms = std::max(max_terms, d.size());
    }
    p.witnesses = static_cast<int>(max_terms);
    auto flip = [](int l) { return DecisionTree::leaf(1 - l); };
    for (const auto& [label, d] : f.axioms) {
        p.outputs.push_back(label);
        std::vector<DecisionTree> row;
        for (const Conjunct& t : d.terms())
            row.push_back(tree_graft(DecisionTree::of_conjunct(t), flip));
        while (row.size() < max_terms) row.push_back(DecisionTree::leaf(1));
        p.relation.push_back(std::move(row));
    }
    p.validate();
    return p;
}

int Formulation::depth() const {
    int d = 0;
    for (const DecisionTree& t : f) d = std::max(d, t.depth());
    for (const DecisionTree& t : g) d = std::max(d, t.depth());
    return d;
}

std::string FormulationFailure::str() const {
    std::ostringstream out;
    out << "x=";
    for (bool b : x) out << (b ? '1' : '0');
    out << " target output " << target_output << " maps to " << mapped_output
        << " failing witness " << witness;
    return out.str();
}

namespace {

void validate_formulation_shape(const SearchProblem& q, const SearchProblem& r,
                                const Formulation& phi) {
    q.validate();
    r.validate();
    if (static_cast<int>(phi.f.size()) != r.input_bits)
        throw InvalidInputError("formulation must compute every target input bit");
    if (phi.g.size() != r.outputs.size())
        throw InvalidInputError("formulation must map every target output");
    for (const DecisionTree& t : phi.f) {
        t.validate();
        if (!t.is_boolean()) throw InvalidInputError("input trees must be boolean");
        for (const VarId& v : t.vars())
            if (!v.is_plain() || v.i < 1 || v.i > q.input_bits)
                throw InvalidInputError("input tree reads outside the source bits");
    }
    for (const DecisionTree& t : phi.g) {
        t.validate();
        for (const VarId& v : t.vars())
            if (!v.is_plain() || v.i < 1 || v.i > q.input_bits)
                throw InvalidInputError("output tree reads outside the source bits");
        for (const auto& node : t.nodes())
            if (node.is_leaf &&
                (node.label < 0 || static_cast<std::size_t>(node.label) >= q.outputs.size()))
                throw InvalidInputError("output tree leaf is not a source output");
    }
    if (q.input_bits > config::exhaustion_cap())
        throw EnumerationBoundError("formulation check exceeds the exhaustion cap");
}

std::vector<bool> bits_of(std::uint64_t bits, int n) {
    std::vector<bool> x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = (bits >> k) & 1;
    return x;
}

std::vector<bool> eval_trees(const std::vector<DecisionTree>& trees, const Assignment& a) {
    std::vector<bool> out(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) out[i] = trees[i].eval(a) != 0;
    return out;
}

} // namespace

FormulationCheck check_formulation(const SearchProblem& q, const SearchProblem& r,
                                   const Formulation& phi) {
    validate_formulation_shape(q, r, phi);
    FormulationCheck res;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q.input_bits); ++bits) {
        std::vector<bool> x = bits_of(bits, q.input_bits);
        Assignment ax = plain_assignment(x);
        std::vector<bool> a = eval_trees(phi.f, ax);
        for (std::size_t b = 0; b < r.outputs.size(); ++b) {
            if (!r.solves(a, static_cast<int>(b))) continue;
            int y = phi.g[b].eval(ax);
            if (q.solves(x, y)) continue;
            int c = 0;
            for (int z = 0; z < q.witnesses; ++z)
                if (q.relation[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)].eval(
                        ax) == 0) {
                    c = z;
                    break;
                }
            res.ok = false;
            res.failure = FormulationFailure{x, r.outputs[b], q.outputs[static_cast<std::size_t>(y)], c};
            return res;
        }
    }
    return res;
}

FormulationCheck check_ce_formulation(const SearchProblem& q, const SearchProblem& r,
                                      const CounterExampleFormulation& ce) {
    validate_formulation_shape(q, r, ce.base);
    if (ce.h.size() != r.outputs.size())
        throw InvalidInputError("counter-example maps must cover every target output");
    for (const auto& row : ce.h) {
        if (static_cast<int>(row.size()) != q.witnesses)
            throw InvalidInputError("counter-example maps must cover every source witness");
        for (const DecisionTree& t : row) {
            t.validate();
            for (const VarId& v : t.vars())
                if (!v.is_plain() || v.i < 1 || v.i > q.input_bits)
                    throw InvalidInputError("counter-example tree reads outside the source bits");
            for (const auto& node : t.nodes())
                if (node.is_leaf && (node.label < 0 || node.label >= r.witnesses))
                    throw InvalidInputError("counter-example leaf is not a target witness");
        }
    }
    FormulationCheck res;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q.input_bits); ++bits) {
        std::vector<bool> x = bits_of(bits, q.input_bits);
        Assignment ax = plain_assignment(x);
        std::vector<bool> a = eval_trees(ce.base.f, ax);
        Assignment aa = plain_assignment(a);
        for (std::size_t b = 0; b < r.outputs.size(); ++b) {
            for (int z = 0; z < q.witnesses; ++z) {
                int c = ce.h[b][static_cast<std::size_t>(z)].eval(ax);
                if (r.relation[b][static_cast<std::size_t>(c)].eval(aa) == 0) continue;
                int y = ce.base.g[b].eval(ax);
                if (q.relation[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)].eval(
                        ax) == 1)
                    continue;
                res.ok = false;
                res.failure =
                    FormulationFailure{x, r.outputs[b], q.outputs[static_cast<std::size_t>(y)], z};
                return res;
            }
        }
    }
    return res;
}

std::vector<Conjunct> compose_conjunct(const Conjunct& t, const std::vector<DecisionTree>& f) {
    if (t.is_zero()) return {};
    auto paths_with = [&f](const VarId& v, int label) {
        if (!v.is_plain() || v.i < 1 || static_cast<std::size_t>(v.i) > f.size())
            throw InvalidInputError("composition needs an input tree for " + v.str());
        const DecisionTree& tree = f[static_cast<std::size_t>(v.i) - 1];
        if (!tree.is_boolean()) throw InvalidInputError("composition needs boolean input trees");
        std::vector<Conjunct> opts;
        for (const auto& [conj, l] : tree.paths())
            if (l == label) opts.push_back(conj);
        return opts;
    };
    std::vector<Conjunct> acc{Conjunct::unit()};
    auto extend = [&acc](const std::vector<Conjunct>& opts) {
        std::vector<Conjunct> next;
        for (const Conjunct& base : acc)
            for (const Conjunct& o : opts) {
                Conjunct c = Conjunct::conjoin(base, o);
                if (!c.is_zero()) next.push_back(std::move(c));
            }
        acc = std::move(next);
    };
    for (const VarId& v : t.positives()) extend(paths_with(v, 1));
    for (const VarId& v : t.negatives()) extend(paths_with(v, 0));
    return acc;
}

Dnf compose_dnf(const Dnf& d, const std::vector<DecisionTree>& f) {
    Dnf out;
    for (const Conjunct& t : d.terms())
        for (Conjunct& c : compose_conjunct(t, f)) out.add(std::move(c));
    return out;
}

ConicalJunta compose_junta(const ConicalJunta& j, const std::vector<DecisionTree>& f) {
    ConicalJunta out;
    for (const auto& [u, mult] : j.entries())
        for (const Conjunct& c : compose_conjunct(u, f)) out.add(c, mult);
    return out;
}

std::string reduced_output_label(const std::string& target_output,
                                 const std::string& source_output) {
    return "G[b=" + target_output + ",y=" + source_output + "]";
}

ReducedProblem reduced_problem(const SearchProblem& q, const SearchProblem& r,
                               const Formulation& phi) {
    validate_formulation_shape(q, r, phi);
    std::set<int> labels;
    for (const DecisionTree& t : phi.g)
        for (const auto& node : t.nodes())
            if (node.is_leaf) labels.insert(node.label);

    ReducedProblem red;
    red.problem.input_bits = q.input_bits;
    red.problem.witnesses = r.witnesses;
    red.axioms.name = "reduced";
    red.axioms.universe = VarUniverse::plains(q.input_bits);

    for (std::size_t b = 0; b < r.outputs.size(); ++b) {
        std::vector<DecisionTree> composed;
        for (const DecisionTree& rel : r.relation[b]) composed.push_back(tree_compose(rel, phi.f));
        for (int y : labels) {
            red.problem.outputs.push_back(
                reduced_output_label(r.outputs[b], q.outputs[static_cast<std::size_t>(y)]));
            red.output_pairs.emplace_back(y, static_cast<int>(b));

            DecisionTree indicator = tree_graft(
                phi.g[b], [y](int l) { return DecisionTree::leaf(l == y ? 1 : 0); });
            std::vector<DecisionTree> row;
            for (const DecisionTree& comp : composed)
                row.push_back(tree_graft(
                    indicator, [&comp](int l) { return l ? comp : DecisionTree::leaf(0); }));
            red.problem.relation.push_back(std::move(row));

            Dnf axiom;
            for (const auto& [conj, l] : phi.g[b].paths())
                if (l != y) axiom.add(conj);
            for (const DecisionTree& comp : composed) {
                Dnf zero_paths = tree_to_dnf(comp, 0);
                for (const Conjunct& term : zero_paths.terms()) axiom.add(term);
            }
            red.axioms.axioms.emplace_back(red.problem.outputs.back(), std::move(axiom));
        }
    }
    red.problem.validate();
    red.axioms.validate();
    return red;
}

Factorization factorize(const SearchProblem& q, const SearchProblem& r, const Formulation& phi) {
    Factorization fac;
    fac.mid = reduced_problem(q, r, phi);

    for (std::size_t i = 0; i < fac.mid.problem.outputs.size(); ++i) {
        int y = fac.mid.output_pairs[i].first;
        fac.weakening.push_back(
            {q.outputs[static_cast<std::size_t>(y)], fac.mid.axioms.axioms[i].second});
    }
    WeakeningCheck wc = check_weakening(false_family(q, "source"), fac.weakening);
    fac.weakening_ok = wc.ok;
    fac.weakening_witness = wc.witness;

    for (int k = 1; k <= q.input_bits; ++k)
        fac.wk_formulation.f.push_back(DecisionTree::reader(VarId::plain(k)));
    for (std::size_t i = 0; i < fac.mid.problem.outputs.size(); ++i)
        fac.wk_formulation.g.push_back(DecisionTree::leaf(fac.mid.output_pairs[i].first));

    fac.ce.base.f = phi.f;
    std::map<std::pair<int, int>, int> mid_index;
    for (std::size_t i = 0; i < fac.mid.output_pairs.size(); ++i)
        mid_index[fac.mid.output_pairs[i]] = static_cast<int>(i);
    for (std::size_t b = 0; b < r.outputs.size(); ++b) {
        int bi = static_cast<int>(b);
        fac.ce.base.g.push_back(tree_graft(phi.g[b], [&mid_index, bi](int y) {
            return DecisionTree::leaf(mid_index.at({y, bi}));
        }));
        std::vector<DecisionTree> row;
        for (int z = 0; z < r.witnesses; ++z) row.push_back(DecisionTree::leaf(z));
        fac.ce.h.push_back(std::move(row));
    }
    FormulationCheck cc = check_ce_formulation(fac.mid.problem, r, fac.ce);
    fac.ce_ok = cc.ok;
    fac.ce_failure = cc.failure;
    return fac;
}

TransformResult transform_sa_proof(const SAProof& r_proof, const SearchProblem& r,
                                   const ReducedProblem& mid, const Formulation& phi) {
    SACheck input_check = check_sa_proof(false_family(r, "target"), r_proof);
    if (!input_check.ok)
        throw InvalidInputError("input proof does not verify against the target family");

    std::map<std::string, int> b_index;
    for (std::size_t b = 0; b < r.outputs.size(); ++b) b_index[r.outputs[b]] = static_cast<int>(b);

    // G_{b,y}: the y-labeled paths of g_b as a unit-multiplicity junta, and
    // the complementary paths as a DNF. Their pointwise product is zero.
    std::map<std::pair<int, int>, ConicalJunta> g_junta;
    std::map<std::pair<int, int>, Dnf> g_bar;
    for (std::size_t i = 0; i < mid.output_pairs.size(); ++i) {
        auto [y, b] = mid.output_pairs[i];
        ConicalJunta gj;
        Dnf gb;
        for (const auto& [conj, l] : phi.g[static_cast<std::size_t>(b)].paths()) {
            if (l == y)
                gj.add(conj, 1);
            else
                gb.add(conj);
        }
        g_junta[{y, b}] = std::move(gj);
        g_bar[{y, b}] = std::move(gb);
    }

    TransformResult res;
    for (std::size_t i = 0; i < r_proof.weakening.size(); ++i) {
        auto it = b_index.find(r_proof.weakening[i].source);
        if (it == b_index.end())
            throw InvalidInputError("proof entry names no target output: " +
                                    r_proof.weakening[i].source);
        int b = it->second;
        Dnf composed = compose_dnf(r_proof.weakening[i].dnf, phi.f);
        ConicalJunta jf = compose_junta(r_proof.juntas[i], phi.f);
        for (std::size_t o = 0; o < mid.output_pairs.size(); ++o) {
            if (mid.output_pairs[o].second != b) continue;
            int y = mid.output_pairs[o].first;
            ConicalJunta junta = junta_mul(jf, g_junta.at({y, b}));
            if (junta.is_zero()) continue;
            Dnf weak = g_bar.at({y, b});
            for (const Conjunct& t : composed.terms()) weak.add(t);
            res.proof.weakening.push_back({mid.axioms.axioms[o].first, std::move(weak)});
            res.proof.juntas.push_back(std::move(junta));
        }
    }
    res.proof.slack = compose_junta(r_proof.slack, phi.f);

    res.check = check_sa_proof(mid.axioms, res.proof);
    if (!res.check.ok) throw Error("internal: transformed proof fails verification");
    res.degree_bound = phi.depth() * (input_check.metrics.degree + 2);
    res.degree_ok = res.check.metrics.degree <= res.degree_bound;
    return res;
}

} // namespace lopsa
