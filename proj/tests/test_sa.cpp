#include "lopsa/config.hpp"
#include "lopsa/formulas.hpp"
#include "lopsa/lp_oracle.hpp"
#include "lopsa/pe.hpp"
#include "lopsa/sa.hpp"

#include <doctest.h>

using namespace lopsa;

namespace {

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

} // namespace

TEST_CASE("ordering family shape") {
    AxiomFamily f = lop(4);
    f.validate();
    CHECK(f.axiom("M1").size() == 3);
    CHECK(f.axiom("R2").size() == 1);
    CHECK(f.has_axiom("A1,2"));
    CHECK(f.has_axiom("T1,2,3"));
    CHECK(f.has_axiom("O2,1"));
    CHECK_FALSE(f.has_axiom("T1,1,2"));
    CHECK(f.max_degree() == 1);
    CHECK_THROWS_AS(f.axiom("nope"), InvalidInputError);
    CHECK_THROWS_AS(lop(2), InvalidInputError);

    // axiom count: n M + n R + C(n,2) A + n(n-1)(n-2) T + n(n-1) O
    CHECK(f.axioms.size() == 4 + 4 + 6 + 24 + 12);
}

TEST_CASE("least-number family and its built-in refutation") {
    for (int n : {1, 4, 8}) {
        AxiomFamily f = least_number(n);
        f.validate();
        CHECK(f.axioms.size() == static_cast<std::size_t>(n) + 1);
        SAProof p = least_number_refutation(n);
        SACheck c = check_sa_proof(f, p);
        CHECK(c.ok);
        CHECK(c.metrics.degree <= 1);
        CHECK(c.metrics.unary);
    }
    // frozen size landmark at n = 8
    SACheck c8 = check_sa_proof(least_number(8), least_number_refutation(8));
    CHECK(c8.metrics.unary_size == 1082);
    CHECK(c8.metrics.complexity == doctest::Approx(1 + log2_of(Int(1082))));
}

TEST_CASE("family registry resolves names") {
    CHECK(family_by_name("lop", 4).axioms.size() == lop(4).axioms.size());
    CHECK(family_by_name("least-number", 3).name == least_number(3).name);
    CHECK_THROWS_AS(family_by_name("nope", 3), InvalidInputError);
}

TEST_CASE("weakening checks catch non-implications") {
    AxiomFamily f = contradiction();

    std::vector<WeakeningEntry> good;
    Dnf wider;
    wider.add(Conjunct::positive({VarId::plain(1)}));
    wider.add(Conjunct::make({}, {VarId::plain(1)}));
    good.push_back({"P", wider});
    CHECK(check_weakening(f, good).ok);

    std::vector<WeakeningEntry> bad;
    Dnf never;
    never.add(Conjunct::zero());
    bad.push_back({"P", never});
    WeakeningCheck wc = check_weakening(f, bad);
    CHECK_FALSE(wc.ok);
    REQUIRE(wc.witness.has_value());
    CHECK(wc.witness->entry == 0);

    std::vector<WeakeningEntry> unknown;
    unknown.push_back({"Z", wider});
    CHECK_THROWS_AS(check_weakening(f, unknown), InvalidInputError);
}

TEST_CASE("refutation checking is exact on a handmade certificate") {
    AxiomFamily f = contradiction();
    // P * 1 + N * 1 = x + (1-x) - 2 = -1
    SAProof p;
    p.weakening.push_back({"P", f.axiom("P")});
    p.weakening.push_back({"N", f.axiom("N")});
    p.juntas.push_back(ConicalJunta::unit());
    p.juntas.push_back(ConicalJunta::unit());

    SACheck c = check_sa_proof(f, p);
    CHECK(c.ok);
    CHECK(c.identity_ok);
    CHECK(c.residual.is_zero());
    CHECK(c.metrics.degree == 1);
    // axioms contribute 2 + 3 monomials (constants included, the negation
    // doubling N), the identity products the same again, no slack
    CHECK(c.metrics.unary);
    CHECK(c.metrics.unary_size == 10);

    // wrong multiplicity leaves a residual
    SAProof wrong = p;
    wrong.juntas[1] = ConicalJunta::of(Conjunct::unit(), Rat(2));
    SACheck cw = check_sa_proof(f, wrong);
    CHECK_FALSE(cw.ok);
    CHECK(cw.weakening_ok);
    CHECK_FALSE(cw.identity_ok);
    CHECK_FALSE(cw.residual.is_zero());
}

TEST_CASE("metrics count products conjunct by conjunct") {
    AxiomFamily f = contradiction();
    SAProof p;
    p.weakening.push_back({"P", f.axiom("P")});
    p.juntas.push_back(ConicalJunta::of(Conjunct::make({}, {VarId::plain(1)}), Rat(1)));
    // product x * !x vanishes: degree stays at the axiom degree
    SAMetrics m = sa_metrics(f, p);
    CHECK(m.degree == 1);
}

TEST_CASE("degree oracle finds the two-axiom contradiction") {
    AxiomFamily f = contradiction();
    DegreeOracleResult r = lp_degree_oracle(f, 1);
    REQUIRE(r.feasible);
    REQUIRE(r.refutation.has_value());
    CHECK(r.dual.empty());
    SACheck c = check_sa_proof(f, *r.refutation);
    CHECK(c.ok);
    CHECK(c.metrics.degree <= 1);
}

TEST_CASE("degree oracle certifies infeasibility with a valid dual") {
    AxiomFamily f = lop(3);
    DegreeOracleResult r = lp_degree_oracle(f, 1);
    REQUIRE_FALSE(r.feasible);
    CHECK_FALSE(r.refutation.has_value());
    CHECK(validate_dual(f, 1, r.dual));
    CHECK(r.dual.at(Monomial{}) == Rat(1));

    // degree 2 flips to feasible at n = 3
    DegreeOracleResult r2 = lp_degree_oracle(f, 2);
    REQUIRE(r2.feasible);
    SACheck c = check_sa_proof(f, *r2.refutation);
    CHECK(c.ok);
    CHECK(c.metrics.degree <= 2);
}

TEST_CASE("ordering family resists degree 1 at n = 4") {
    AxiomFamily f = lop(4);
    DegreeOracleResult r = lp_degree_oracle(f, 1);
    REQUIRE_FALSE(r.feasible);
    CHECK(validate_dual(f, 1, r.dual));
    // the uniform-order values agree with Conditions 1-3 at degree 1
    CHECK(check_conditions(f, 1, 4).ok);
}

TEST_CASE("uniform-order values fail condition 3 at degree 2, n = 4") {
    ConditionsReport cr = check_conditions(lop(4), 2, 4);
    REQUIRE_FALSE(cr.ok);
    REQUIRE(cr.violation.has_value());
    CHECK(cr.violation->condition == 3);
    CHECK(cr.violation->axiom == "M1");
    CHECK(cr.violation->value == Rat(-1, 6));
}

TEST_CASE("pool extension admits weakenings as axioms") {
    AxiomFamily f = contradiction();
    Dnf wider;
    wider.add(Conjunct::positive({VarId::plain(1)}));
    wider.add(Conjunct::make({}, {VarId::plain(1)}));
    std::vector<WeakeningEntry> pool = {{"P", wider}};

    AxiomFamily ext = extend_with_pool(f, pool);
    CHECK(ext.axioms.size() == f.axioms.size() + 1);
    CHECK(ext.has_axiom("W0(P)"));

    DegreeOracleResult r = sigma2_lp_oracle(f, 1, pool);
    REQUIRE(r.feasible);
    CHECK(check_sa_proof(ext, *r.refutation).ok);

    std::vector<WeakeningEntry> bogus = {{"P", Dnf{}}};
    CHECK_THROWS_AS(extend_with_pool(f, bogus), InvalidInputError);
}

TEST_CASE("junta and monomial bases respect the declared universe") {
    VarUniverse u = VarUniverse::orders(3);
    for (const Conjunct& c : junta_basis(u, 1)) {
        CHECK(c.degree() <= 1);
        CHECK(c.negatives().empty()); // order variables appear positively
    }
    VarUniverse up = VarUniverse::plains(2);
    bool saw_negative = false;
    for (const Conjunct& c : junta_basis(up, 1))
        if (!c.negatives().empty()) saw_negative = true;
    CHECK(saw_negative); // plain variables carry both polarities

    CHECK(monomial_basis(up, 1).size() == 3);  // {}, x1, x2
    CHECK(monomial_basis(up, 2).size() == 4);  // plus x1x2
}

TEST_CASE("product degree accounts for cancellation by clash") {
    Dnf d;
    d.add(Conjunct::positive({VarId::plain(1)}));
    Conjunct u = Conjunct::make({}, {VarId::plain(1)});
    // the only product term clashes away; degree falls back to deg(u)
    CHECK(product_degree(d, u) == 1);

    Conjunct v = Conjunct::positive({VarId::plain(2)});
    CHECK(product_degree(d, v) == 2);
}
