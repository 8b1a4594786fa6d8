#include "lopsa/config.hpp"
#include "lopsa/lp_oracle.hpp"
#include "lopsa/reductions.hpp"

#include <doctest.h>

#include <set>

using namespace lopsa;

namespace {

// P says x1, N says !x1: the canonical unsatisfiable pair.
AxiomFamily contradiction() {
    AxiomFamily f;
    f.name = "contradiction";
    f.universe = VarUniverse::plains(1);
    Dnf dp, dn;
    dp.add(Conjunct::positive({VarId::plain(1)}));
    dn.add(Conjunct::make({}, {VarId::plain(1)}));
    f.axioms.emplace_back("P", dp);
    f.axioms.emplace_back("N", dn);
    f.validate();
    return f;
}

SearchProblem contradiction_problem() { return ff_problem(contradiction()); }

Formulation identity_formulation(const SearchProblem& r) {
    Formulation phi;
    for (int b = 1; b <= r.input_bits; ++b) phi.f.push_back(DecisionTree::reader(VarId::plain(b)));
    for (std::size_t b = 0; b < r.outputs.size(); ++b)
        phi.g.push_back(DecisionTree::leaf(static_cast<int>(b)));
    return phi;
}

} // namespace

TEST_CASE("false family and problem form are inverse views") {
    AxiomFamily f = contradiction();
    SearchProblem r = ff_problem(f);
    r.validate();
    CHECK(r.input_bits == 1);
    CHECK(r.outputs == std::vector<std::string>{"P", "N"});
    CHECK(r.is_total());

    // output o solves x iff axiom o is false at x
    CHECK(r.solves({false}, 0));  // P = x1 fails at 0
    CHECK_FALSE(r.solves({true}, 0));
    CHECK(r.solves({true}, 1));
    CHECK(r.solution({false}) == 0);

    AxiomFamily back = false_family(r, f.name);
    back.validate();
    CHECK(back.axioms.size() == f.axioms.size());
    // same truth table on every input
    for (bool x1 : {false, true}) {
        Assignment a = plain_assignment({x1});
        for (std::size_t i = 0; i < f.axioms.size(); ++i)
            CHECK(f.axioms[i].second.eval(a) == back.axioms[i].second.eval(a));
    }
}

TEST_CASE("totality detection") {
    SearchProblem p;
    p.input_bits = 1;
    p.outputs = {"only"};
    p.witnesses = 1;
    p.relation = {{DecisionTree::reader(VarId::plain(1))}};
    p.validate();
    CHECK_FALSE(p.is_total()); // x1 = 0 has no solution
}

TEST_CASE("formulation checking accepts identity and rejects a misrouted g") {
    SearchProblem r = contradiction_problem();
    Formulation phi = identity_formulation(r);
    CHECK(check_formulation(r, r, phi).ok);

    Formulation bad = phi;
    std::swap(bad.g[0], bad.g[1]); // map P-solutions to N and back
    FormulationCheck fc = check_formulation(r, r, bad);
    CHECK_FALSE(fc.ok);
    REQUIRE(fc.failure.has_value());
    CHECK(fc.failure->target_output != fc.failure->mapped_output);

    Formulation shapeless;
    CHECK_THROWS_AS(check_formulation(r, r, shapeless), InvalidInputError);
}

TEST_CASE("conjunct composition partitions the composed support") {
    SearchProblem r = contradiction_problem();
    std::vector<DecisionTree> f = {DecisionTree::query(
        VarId::plain(1), DecisionTree::leaf(1), DecisionTree::leaf(0))}; // negation
    Conjunct t = Conjunct::positive({VarId::plain(1)});
    std::vector<Conjunct> parts = compose_conjunct(t, f);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == Conjunct::make({}, {VarId::plain(1)}));

    Dnf d;
    d.add(t);
    Dnf composed = compose_dnf(d, f);
    for (bool x1 : {false, true}) {
        Assignment a = plain_assignment({x1});
        CHECK(composed.eval(a) == d.eval(plain_assignment({!x1})));
    }
}

TEST_CASE("reduced problem pairs outputs and keeps indicator axioms") {
    SearchProblem r = contradiction_problem();
    Formulation phi = identity_formulation(r);
    ReducedProblem mid = reduced_problem(r, r, phi);
    mid.problem.validate();
    mid.axioms.validate();
    CHECK(mid.output_pairs.size() == mid.problem.outputs.size());
    CHECK(mid.problem.input_bits == r.input_bits);
    // one reduced output per (leaf label, target output) pair; the identity
    // formulation has both labels as leaves, so all four pairs appear
    std::set<std::pair<int, int>> seen(mid.output_pairs.begin(), mid.output_pairs.end());
    CHECK(seen.size() == 4);
    for (const auto& [y, b] : mid.output_pairs) {
        CHECK(y >= 0);
        CHECK(y < 2);
        CHECK(b >= 0);
        CHECK(b < 2);
    }

    // the reduced problem still solves every input
    CHECK(mid.problem.is_total());
}

TEST_CASE("factorization validates both halves on the identity reduction") {
    SearchProblem r = contradiction_problem();
    Formulation phi = identity_formulation(r);
    Factorization fac = factorize(r, r, phi);
    CHECK(fac.weakening_ok);
    CHECK(fac.ce_ok);
    CHECK(fac.weakening.size() == fac.mid.problem.outputs.size());
    CHECK(check_ce_formulation(fac.mid.problem, r, fac.ce).ok);
}

TEST_CASE("proof transformation preserves refutation with bounded degree") {
    AxiomFamily f = contradiction();
    SearchProblem r = ff_problem(f);
    Formulation phi = identity_formulation(r);

    DegreeOracleResult oracle = lp_degree_oracle(f, 1);
    REQUIRE(oracle.feasible);

    ReducedProblem mid = reduced_problem(r, r, phi);
    TransformResult tr = transform_sa_proof(*oracle.refutation, r, mid, phi);
    CHECK(tr.check.ok);
    CHECK(tr.degree_ok);
    CHECK(tr.check.metrics.degree <= tr.degree_bound);
    CHECK(tr.degree_bound == phi.depth() * (1 + 2));
}

TEST_CASE("search problems reject malformed relations") {
    SearchProblem p;
    p.input_bits = 1;
    p.outputs = {"a", "a"};
    p.witnesses = 1;
    p.relation = {{DecisionTree::leaf(1)}, {DecisionTree::leaf(1)}};
    CHECK_THROWS_AS(p.validate(), InvalidInputError); // duplicate labels

    SearchProblem q;
    q.input_bits = 1;
    q.outputs = {"a"};
    q.witnesses = 2;
    q.relation = {{DecisionTree::leaf(1)}}; // one tree, two witnesses
    CHECK_THROWS_AS(q.validate(), InvalidInputError);

    SearchProblem s;
    s.input_bits = 1;
    s.outputs = {"a"};
    s.witnesses = 1;
    s.relation = {{DecisionTree::leaf(2)}}; // non-boolean relation tree
    CHECK_THROWS_AS(s.validate(), InvalidInputError);
}
