#include "lopsa/json_io.hpp"

#include "lopsa/config.hpp"

#include <sstream>

namespace lopsa {

std::string var_to_token(const VarId& v) { return v.str(); }

VarId var_from_token(const std::string& s) {
    if (s.size() >= 2 && s[0] == 'x' && s[1] == '(') {
        std::size_t comma = s.find(',');
        if (comma == std::string::npos || s.back() != ')')
            throw InvalidInputError("malformed variable token: " + s);
        int i = std::stoi(s.substr(2, comma - 2));
        int j = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
        return VarId::order(i, j);
    }
    if (s.size() >= 2 && s[0] == 'x') return VarId::plain(std::stoi(s.substr(1)));
    throw InvalidInputError("malformed variable token: " + s);
}

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    return rat_from_string(j.get<std::string>());
}

Json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    return Int(j.get<std::string>());
}

void to_json(Json& j, const VarId& v) { j = var_to_token(v); }
void from_json(const Json& j, VarId& v) { v = var_from_token(j.get<std::string>()); }

void to_json(Json& j, const Conjunct& t) {
    if (t.is_zero()) {
        j = Json{{"zero", true}};
        return;
    }
    j = Json{{"pos", t.positives()}, {"neg", t.negatives()}};
}

void from_json(const Json& j, Conjunct& t) {
    if (j.contains("zero") && j.at("zero").get<bool>()) {
        t = Conjunct::zero();
        return;
    }
    std::vector<VarId> pos, neg;
    if (j.contains("pos")) pos = j.at("pos").get<std::vector<VarId>>();
    if (j.contains("neg")) neg = j.at("neg").get<std::vector<VarId>>();
    t = Conjunct::make(std::move(pos), std::move(neg));
}

void to_json(Json& j, const Dnf& d) { j = Json{{"terms", d.terms()}}; }

void from_json(const Json& j, Dnf& d) {
    d = Dnf();
    for (const Conjunct& t : j.at("terms").get<std::vector<Conjunct>>()) d.add(t);
}

void to_json(Json& j, const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"monomial", m}, {"coeff", rat_to_json(c)}});
    j = Json{{"terms", std::move(terms)}};
}

void from_json(const Json& j, Polynomial& p) {
    p = Polynomial();
    for (const Json& e : j.at("terms")) {
        Monomial m = e.at("monomial").get<Monomial>();
        canonicalize_monomial(m);
        p.add_term(m, rat_from_json(e.at("coeff")));
    }
}

void to_json(Json& j, const ConicalJunta& jn) {
    Json entries = Json::array();
    for (const auto& [u, mult] : jn.entries())
        entries.push_back(Json{{"conjunct", u}, {"mult", rat_to_json(mult)}});
    j = Json{{"entries", std::move(entries)}};
}

void from_json(const Json& j, ConicalJunta& jn) {
    jn = ConicalJunta();
    for (const Json& e : j.at("entries"))
        jn.add(e.at("conjunct").get<Conjunct>(), rat_from_json(e.at("mult")));
}

void to_json(Json& j, const TotalOrder& z) { j = z.seq; }
void from_json(const Json& j, TotalOrder& z) { z = TotalOrder::of(j.get<std::vector<int>>()); }

void to_json(Json& j, const CanonicalTerm& t) { j = t.order; }
void from_json(const Json& j, CanonicalTerm& t) {
    t = CanonicalTerm::of(j.get<std::vector<int>>());
}

void to_json(Json& j, const NormalizedDnf& nd) {
    j = Json{{"support_size", nd.support_size}, {"terms", nd.terms}};
}

void from_json(const Json& j, NormalizedDnf& nd) {
    nd = NormalizedDnf::make(j.at("support_size").get<int>(),
                             j.at("terms").get<std::vector<CanonicalTerm>>());
}

void to_json(Json& j, const VarUniverse& u) {
    j = Json{{"order_n", u.order_n}, {"plain_m", u.plain_m}};
}

void from_json(const Json& j, VarUniverse& u) {
    u.order_n = j.value("order_n", 0);
    u.plain_m = j.value("plain_m", 0);
}

void to_json(Json& j, const AxiomFamily& f) {
    Json axioms = Json::array();
    for (const auto& [label, d] : f.axioms) axioms.push_back(Json{{"label", label}, {"dnf", d}});
    j = Json{{"name", f.name}, {"universe", f.universe}, {"axioms", std::move(axioms)}};
}

void from_json(const Json& j, AxiomFamily& f) {
    f = AxiomFamily();
    f.name = j.at("name").get<std::string>();
    f.universe = j.at("universe").get<VarUniverse>();
    for (const Json& a : j.at("axioms"))
        f.axioms.emplace_back(a.at("label").get<std::string>(), a.at("dnf").get<Dnf>());
    f.validate();
}

void to_json(Json& j, const WeakeningEntry& w) {
    j = Json{{"source", w.source}, {"dnf", w.dnf}};
}

void from_json(const Json& j, WeakeningEntry& w) {
    w.source = j.at("source").get<std::string>();
    w.dnf = j.at("dnf").get<Dnf>();
}

void to_json(Json& j, const SAProof& p) {
    j = Json{{"weakening", p.weakening}, {"juntas", p.juntas}, {"slack", p.slack}};
}

void from_json(const Json& j, SAProof& p) {
    p.weakening = j.at("weakening").get<std::vector<WeakeningEntry>>();
    p.juntas = j.at("juntas").get<std::vector<ConicalJunta>>();
    p.slack = j.value("slack", ConicalJunta());
    if (p.weakening.size() != p.juntas.size())
        throw InvalidInputError("certificate: weakening and junta counts differ");
}

void to_json(Json& j, const SAMetrics& m) {
    j = Json{{"degree", m.degree}, {"unary", m.unary}};
    if (m.unary) {
        j["unary_size"] = int_to_json(m.unary_size);
        j["complexity"] = m.complexity;
    }
}

namespace {

Json tree_node_json(const DecisionTree& t, int at) {
    const DecisionTree::Node& nd = t.nodes()[static_cast<std::size_t>(at)];
    if (nd.is_leaf) return Json{{"leaf", nd.label}};
    return Json{{"var", nd.var},
                {"lo", tree_node_json(t, nd.lo)},
                {"hi", tree_node_json(t, nd.hi)}};
}

DecisionTree tree_from_json(const Json& j) {
    if (j.contains("leaf")) return DecisionTree::leaf(j.at("leaf").get<int>());
    return DecisionTree::query(j.at("var").get<VarId>(), tree_from_json(j.at("lo")),
                               tree_from_json(j.at("hi")));
}

} // namespace

void to_json(Json& j, const DecisionTree& t) { j = tree_node_json(t, t.root()); }

void from_json(const Json& j, DecisionTree& t) {
    t = tree_from_json(j);
    t.validate();
}

void to_json(Json& j, const SearchProblem& p) {
    j = Json{{"input_bits", p.input_bits},
             {"outputs", p.outputs},
             {"witnesses", p.witnesses},
             {"relation", p.relation}};
}

void from_json(const Json& j, SearchProblem& p) {
    p.input_bits = j.at("input_bits").get<int>();
    p.outputs = j.at("outputs").get<std::vector<std::string>>();
    p.witnesses = j.at("witnesses").get<int>();
    p.relation = j.at("relation").get<std::vector<std::vector<DecisionTree>>>();
    p.validate();
}

void to_json(Json& j, const Formulation& f) { j = Json{{"f", f.f}, {"g", f.g}}; }

void from_json(const Json& j, Formulation& f) {
    f.f = j.at("f").get<std::vector<DecisionTree>>();
    f.g = j.at("g").get<std::vector<DecisionTree>>();
}

void to_json(Json& j, const CounterExampleFormulation& f) {
    j = Json{{"f", f.base.f}, {"g", f.base.g}, {"h", f.h}};
}

void from_json(const Json& j, CounterExampleFormulation& f) {
    f.base.f = j.at("f").get<std::vector<DecisionTree>>();
    f.base.g = j.at("g").get<std::vector<DecisionTree>>();
    f.h = j.at("h").get<std::vector<std::vector<DecisionTree>>>();
}

void to_json(Json& j, const PeReport& r) {
    Json breakdown = Json::array();
    for (const auto& [label, value] : r.breakdown)
        breakdown.push_back(Json{{"part", label}, {"value", rat_to_json(value)}});
    j = Json{{"value", rat_to_json(r.value)},
             {"universe", int_to_json(r.universe)},
             {"breakdown", std::move(breakdown)}};
}

void to_json(Json& j, const ConditionViolation& v) {
    j = Json{{"condition", v.condition}, {"junta", v.junta}, {"value", rat_to_json(v.value)}};
    if (!v.axiom.empty()) j["axiom"] = v.axiom;
}

void to_json(Json& j, const ConditionsReport& r) {
    j = Json{{"ok", r.ok},
             {"degree", r.degree},
             {"conjuncts", r.conjuncts},
             {"products_checked", r.products_checked}};
    if (r.violation) j["violation"] = *r.violation;
}

void to_json(Json& j, const KfactReport& r) {
    j = Json{{"pe_value", rat_to_json(r.pe_value)},
             {"term_count", int_to_json(r.term_count)},
             {"k_factorial", int_to_json(r.k_factorial)},
             {"nonneg", r.nonneg}};
    if (r.rejected_not_starting_1) j["rejected_not_starting_1"] = *r.rejected_not_starting_1;
}

void to_json(Json& j, const OvercountReport& r) {
    Json buckets = Json::object();
    for (const auto& [i, count] : r.accepted_by_exactly)
        buckets[std::to_string(i)] = int_to_json(count);
    j = Json{{"rejected", int_to_json(r.rejected)},
             {"accepted_by_exactly", std::move(buckets)},
             {"universe", int_to_json(r.universe)},
             {"pe_value", rat_to_json(r.pe_value)},
             {"overcount", int_to_json(r.overcount)},
             {"identity_holds", r.identity_holds}};
}

void to_json(Json& j, const HitMatrix& m) {
    Json entries = Json::array();
    for (char e : m.entries) entries.push_back(e ? 1 : 0);
    j = Json{{"mode", m.mode == HitMode::Pairs ? "pairs" : "triples"},
             {"index", m.index},
             {"entries", std::move(entries)}};
}

void to_json(Json& j, const HitReport& r) {
    j = Json{{"matrix", r.matrix},
             {"ones", int_to_json(r.ones)},
             {"hits", int_to_json(r.hits)},
             {"floor_bound", rat_to_json(r.floor_bound)},
             {"floor_ok", r.floor_ok}};
}

void to_json(Json& j, const M1Report& r) {
    j = Json{{"is_weakening", r.is_weakening}};
    if (r.violating_order) {
        j["violating_order"] = *r.violating_order;
        return;
    }
    j["pe_value"] = rat_to_json(r.pe_value);
    j["nonneg"] = r.nonneg;
    j["merged"] = r.merged;
    j["merged_pe"] = rat_to_json(r.merged_pe);
    j["certificate"] = r.certificate;
}

void to_json(Json& j, const ImplicationWitness& w) {
    Json a = Json::array();
    for (const auto& [v, val] : w.assignment) a.push_back(Json{{"var", v}, {"value", val}});
    j = Json{{"entry", w.entry}, {"assignment", std::move(a)}};
}

void to_json(Json& j, const SACheck& c) {
    j = Json{{"ok", c.ok},
             {"weakening_ok", c.weakening_ok},
             {"identity_ok", c.identity_ok},
             {"metrics", c.metrics}};
    if (c.witness) j["witness"] = *c.witness;
    if (!c.identity_ok) j["residual"] = c.residual;
}

void to_json(Json& j, const FormulationFailure& f) {
    std::string bits;
    for (bool b : f.x) bits += b ? '1' : '0';
    j = Json{{"x", bits},
             {"target_output", f.target_output},
             {"mapped_output", f.mapped_output},
             {"witness", f.witness}};
}

void to_json(Json& j, const FormulationCheck& c) {
    j = Json{{"ok", c.ok}};
    if (c.failure) j["failure"] = *c.failure;
}

void to_json(Json& j, const DegreeOracleResult& r) {
    j = Json{{"feasible", r.feasible},
             {"pivots", r.pivots},
             {"lp_rows", r.lp_rows},
             {"lp_cols", r.lp_cols}};
    if (r.refutation) j["refutation"] = *r.refutation;
    if (!r.feasible) {
        Json dual = Json::object();
        for (const auto& [m, value] : r.dual) dual[monomial_str(m)] = rat_to_json(value);
        j["dual"] = std::move(dual);
    }
}

void to_json(Json& j, const CoverSet& s) {
    j = Json{{"elements", s.elements}, {"ordering", s.ordering}};
}

void to_json(Json& j, const CoverResult& r) {
    j = Json{{"size", r.size}, {"cover", r.cover}, {"nodes", r.nodes}, {"exact", r.exact}};
}

void to_json(Json& j, const Factorization& f) {
    j = Json{{"weakening", f.weakening},
             {"weakening_formulation", f.wk_formulation},
             {"ce_formulation", f.ce},
             {"mid_axioms", f.mid.axioms},
             {"weakening_ok", f.weakening_ok},
             {"ce_ok", f.ce_ok}};
    if (f.weakening_witness) j["weakening_witness"] = *f.weakening_witness;
    if (f.ce_failure) j["ce_failure"] = *f.ce_failure;
}

void to_json(Json& j, const TransformResult& r) {
    j = Json{{"proof", r.proof},
             {"check", r.check},
             {"degree_bound", r.degree_bound},
             {"degree_ok", r.degree_ok}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

} // namespace lopsa
