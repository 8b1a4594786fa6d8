#include "lopsa/sa.hpp"

#include "lopsa/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace lopsa {

std::string ImplicationWitness::str() const {
    std::ostringstream out;
    out << "entry " << entry << " at";
    for (const auto& [v, b] : assignment) out << ' ' << v.str() << '=' << (b ? '1' : '0');
    return out.str();
}

namespace {

// Exhausts the 2^k assignments of the mentioned variables; returns the first
// one where src holds and weak does not.
std::optional<std::vector<std::pair<VarId, bool>>> implication_gap(const Dnf& src,
                                                                   const Dnf& weak) {
    std::set<VarId> mentioned;
    for (const Monomial& m : {src.vars(), weak.vars()})
        mentioned.insert(m.begin(), m.end());
    std::vector<VarId> vars(mentioned.begin(), mentioned.end());
    if (static_cast<int>(vars.size()) > config::exhaustion_cap())
        throw EnumerationBoundError("implication check over " + std::to_string(vars.size()) +
                                    " variables exceeds the exhaustion cap " +
                                    std::to_string(config::exhaustion_cap()));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
        Assignment a = [&vars, bits](const VarId& v) {
            auto it = std::lower_bound(vars.begin(), vars.end(), v);
            return ((bits >> (it - vars.begin())) & 1) != 0;
        };
        if (src.eval(a) && !weak.eval(a)) {
            std::vector<std::pair<VarId, bool>> point;
            for (std::size_t i = 0; i < vars.size(); ++i)
                point.emplace_back(vars[i], ((bits >> i) & 1) != 0);
            return point;
        }
    }
    return std::nullopt;
}

Int two_pow(std::size_t e) {
    Int r = 1;
    r <<= e;
    return r;
}

} // namespace

WeakeningCheck check_weakening(const AxiomFamily& f, const std::vector<WeakeningEntry>& entries) {
    WeakeningCheck res;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const WeakeningEntry& e = entries[i];
        if (!f.has_axiom(e.source))
            throw InvalidInputError("weakening entry " + std::to_string(i) +
                                    " names unknown axiom " + e.source);
        for (const VarId& v : e.dnf.vars()) f.universe.require(v);
        if (auto gap = implication_gap(f.axiom(e.source), e.dnf)) {
            res.ok = false;
            res.witness = ImplicationWitness{i, std::move(*gap)};
            return res;
        }
    }
    return res;
}

SAMetrics sa_metrics(const AxiomFamily& f, const SAProof& p) {
    if (p.juntas.size() != p.weakening.size())
        throw InvalidInputError("junta count does not match weakening entry count");
    SAMetrics m;
    m.unary = true;
    Int size = 0;

    for (const auto& [label, d] : f.axioms) {
        (void)label;
        m.degree = std::max(m.degree, d.degree());
        Int monos = 1; // the -1 constant
        for (const Conjunct& t : d.terms())
            monos += t.is_zero() ? Int(0) : two_pow(t.negatives().size());
        size += monos;
    }

    for (std::size_t i = 0; i < p.weakening.size(); ++i) {
        const Dnf& d = p.weakening[i].dnf;
        for (const auto& [u, mult] : p.juntas[i].entries()) {
            if (!rat_is_integer(mult)) m.unary = false;
            Int monos = two_pow(u.negatives().size()); // the -1 * u part
            m.degree = std::max(m.degree, u.degree());
            for (const Conjunct& t : d.terms()) {
                Conjunct tu = Conjunct::conjoin(t, u);
                if (tu.is_zero()) continue;
                m.degree = std::max(m.degree, tu.degree());
                monos += two_pow(tu.negatives().size());
            }
            if (m.unary) size += Int(mult.get_num()) * monos;
        }
    }

    for (const auto& [u, mult] : p.slack.entries()) {
        if (!rat_is_integer(mult)) m.unary = false;
        m.degree = std::max(m.degree, u.degree());
        if (m.unary) size += Int(mult.get_num()) * two_pow(u.negatives().size());
    }

    if (m.unary) {
        m.unary_size = size;
        m.complexity = m.degree + (size > 0 ? log2_of(size) : 0.0);
    }
    return m;
}

SACheck check_sa_proof(const AxiomFamily& f, const SAProof& p) {
    if (p.juntas.size() != p.weakening.size())
        throw InvalidInputError("junta count does not match weakening entry count");
    SACheck res;

    WeakeningCheck wc = check_weakening(f, p.weakening);
    res.weakening_ok = wc.ok;
    res.witness = wc.witness;

    Polynomial sum;
    for (std::size_t i = 0; i < p.weakening.size(); ++i)
        sum += poly_mul(dnf_to_poly(p.weakening[i].dnf), p.juntas[i].to_poly());
    sum += p.slack.to_poly();
    res.residual = sum + Polynomial::constant(1);
    res.identity_ok = res.residual.is_zero();

    res.metrics = sa_metrics(f, p);
    res.ok = res.weakening_ok && res.identity_ok;
    return res;
}

} // namespace lopsa
