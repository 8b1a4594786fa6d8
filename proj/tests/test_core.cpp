#include "lopsa/config.hpp"
#include "lopsa/decision_tree.hpp"
#include "lopsa/dnf.hpp"
#include "lopsa/polynomial.hpp"
#include "lopsa/rational.hpp"
#include "lopsa/varid.hpp"

#include <doctest.h>

#include <map>

using namespace lopsa;

TEST_CASE("rational text forms round-trip and canonicalize") {
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_to_string(rat_from_string("-4/6")) == "-2/3");
    CHECK(rat_from_string("10/5") == Rat(2));
    CHECK(rat_is_integer(rat_from_string("8/4")));
    CHECK_FALSE(rat_is_integer(rat_from_string("1/3")));
    CHECK_THROWS_AS(rat_from_string("1/0"), InvalidInputError);
    CHECK_THROWS_AS(rat_from_string("x"), InvalidInputError);
    CHECK_THROWS_AS(rat_from_string(""), InvalidInputError);
    CHECK_THROWS_AS(rat_from_string("1.5"), InvalidInputError);
}

TEST_CASE("factorial, binomial, log2") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(log2_of(Int(1024)) == doctest::Approx(10.0));
    CHECK(log2_of(Int(1082)) == doctest::Approx(10.0798).epsilon(1e-3));
}

TEST_CASE("variable ordering and tokens") {
    VarId a = VarId::order(1, 2), b = VarId::order(2, 1), p = VarId::plain(1);
    CHECK(a < b);
    CHECK(a < p); // order kind sorts before plain
    CHECK(a.str() == "x(1,2)");
    CHECK(p.str() == "x1");
    CHECK(VarId::order(3, 3).is_diagonal());

    Monomial m = {b, a, b};
    canonicalize_monomial(m);
    CHECK(m == Monomial{a, b});
    CHECK(monomial_union(Monomial{a}, Monomial{a, p}) == Monomial{a, p});
}

TEST_CASE("universe membership") {
    VarUniverse u = VarUniverse::orders(3);
    CHECK(u.contains(VarId::order(3, 1)));
    CHECK_FALSE(u.contains(VarId::order(4, 1)));
    CHECK_FALSE(u.contains(VarId::plain(1)));
    CHECK_THROWS_AS(u.require(VarId::plain(1)), InvalidInputError);
}

TEST_CASE("conjuncts sort literals and collapse clashes to zero") {
    VarId a = VarId::order(1, 2), b = VarId::order(2, 1);
    Conjunct t = Conjunct::make({b, a, b}, {});
    CHECK(t.positives() == std::vector<VarId>{a, b});
    CHECK(t.degree() == 2);

    Conjunct clash = Conjunct::make({a}, {a});
    CHECK(clash.is_zero());
    CHECK(Conjunct::conjoin(Conjunct::make({a}), Conjunct::make({}, {a})).is_zero());

    Conjunct joined = Conjunct::conjoin(Conjunct::make({a}), Conjunct::make({b}));
    CHECK(joined == Conjunct::make({a, b}));
    CHECK(Conjunct::unit().is_unit());

    std::map<VarId, bool> vals = {{a, true}, {b, false}};
    Assignment as = [&](const VarId& v) { return vals.at(v); };
    CHECK(Conjunct::make({a}, {b}).eval(as));
    CHECK_FALSE(Conjunct::make({a, b}).eval(as));
    CHECK_FALSE(clash.eval(as));
}

TEST_CASE("conjunct element extraction ignores plain variables") {
    Conjunct t = Conjunct::make({VarId::order(3, 1), VarId::plain(2)}, {VarId::order(1, 5)});
    CHECK(t.elements() == std::vector<int>{1, 3, 5});
    CHECK(t.mentions_plain());
    CHECK(t.mentions_order());
}

TEST_CASE("polynomials drop zero coefficients and multiply idempotently") {
    VarId x = VarId::plain(1), y = VarId::plain(2);
    Polynomial p = Polynomial::variable(x);
    p.add_term({x}, Rat(-1));
    CHECK(p.is_zero());

    Polynomial q = Polynomial::variable(x) + Polynomial::variable(y);
    Polynomial sq = poly_mul(q, q);
    // (x + y)^2 = x + 2xy + y over x^2 = x
    CHECK(sq.coeff({x}) == 1);
    CHECK(sq.coeff({y}) == 1);
    CHECK(sq.coeff({x, y}) == 2);
    CHECK(sq.degree() == 2);

    Polynomial c = conjunct_to_poly(Conjunct::make({x}, {y}));
    CHECK(c.coeff({x}) == 1);
    CHECK(c.coeff({x, y}) == -1);
    CHECK(c.monomial_count() == 2);
    CHECK(conjunct_to_poly(Conjunct::zero()).is_zero());
}

TEST_CASE("polynomial composition substitutes plain inputs") {
    VarId x1 = VarId::plain(1), x2 = VarId::plain(2);
    Polynomial p = Polynomial::monomial({x1, x2});
    // x1 -> 1 - x1, x2 -> x2
    std::vector<Polynomial> sub = {Polynomial::constant(1) - Polynomial::variable(x1),
                                   Polynomial::variable(x2)};
    Polynomial r = compose(p, sub);
    CHECK(r.coeff({x2}) == 1);
    CHECK(r.coeff({x1, x2}) == -1);
}

TEST_CASE("dnf evaluation counts satisfied terms") {
    VarId x = VarId::plain(1), y = VarId::plain(2);
    Dnf d;
    d.add(Conjunct::make({x}));
    d.add(Conjunct::make({x}, {y}));
    d.add(Conjunct::make({}, {x}));
    std::map<VarId, bool> vals = {{x, true}, {y, false}};
    Assignment as = [&](const VarId& v) { return vals.at(v); };
    CHECK(d.eval(as));
    CHECK(d.satisfied_terms(as) == 2);
    CHECK(d.degree() == 2);
    CHECK(dnf_to_poly(d).eval(as) == Rat(1)); // satisfied count minus one

    Dnf empty;
    CHECK_FALSE(empty.eval(as));
    CHECK(dnf_to_poly(empty).eval(as) == Rat(-1));
}

TEST_CASE("juntas merge duplicates and reject nothing nonnegative") {
    VarId x = VarId::plain(1);
    ConicalJunta j;
    j.add(Conjunct::make({x}), Rat(1, 2));
    j.add(Conjunct::make({x}), Rat(3, 2));
    CHECK(j.entries().size() == 1);
    CHECK(j.entries()[0].second == Rat(2));
    CHECK(j.is_unary());
    CHECK(j.unary_monomials() == 2);

    ConicalJunta k = ConicalJunta::of(Conjunct::make({}, {x}), Rat(1));
    CHECK(k.unary_monomials() == 2); // one negation doubles the monomial count
    ConicalJunta prod = junta_mul(j, k);
    CHECK(prod.is_zero()); // x & !x clashes away
}

TEST_CASE("decision tree paths partition the cube") {
    VarId x1 = VarId::plain(1), x2 = VarId::plain(2);
    DecisionTree t = DecisionTree::query(x1, DecisionTree::leaf(0), DecisionTree::reader(x2));
    t.validate();
    CHECK(t.depth() == 2);
    CHECK(t.is_boolean());

    auto paths = t.paths();
    CHECK(paths.size() == 3);
    // indicator sum of path conjuncts is the constant 1
    Polynomial sum;
    for (const auto& [c, label] : paths) sum += conjunct_to_poly(c);
    CHECK(sum == Polynomial::constant(1));

    // tree_to_poly agrees with eval on all four points
    Polynomial p = tree_to_poly(t);
    for (int bits = 0; bits < 4; ++bits) {
        std::map<VarId, bool> vals = {{x1, (bits & 1) != 0}, {x2, (bits & 2) != 0}};
        Assignment as = [&](const VarId& v) { return vals.at(v); };
        CHECK(p.eval(as) == Rat(t.eval(as)));
    }

    Dnf ones = tree_to_dnf(t, 1);
    CHECK(ones.size() == 1);
    CHECK(ones.terms()[0] == Conjunct::make({x1, x2}));
}

TEST_CASE("tree composition collapses repeated queries") {
    VarId x1 = VarId::plain(1), x2 = VarId::plain(2);
    DecisionTree outer = DecisionTree::query(x1, DecisionTree::leaf(0), DecisionTree::reader(x2));
    // both inputs read x1: the composed tree may query it once per path only
    std::vector<DecisionTree> inner = {DecisionTree::reader(x1), DecisionTree::reader(x1)};
    DecisionTree composed = tree_compose(outer, inner);
    composed.validate();
    for (int bits = 0; bits < 2; ++bits) {
        std::map<VarId, bool> vals = {{x1, bits != 0}};
        Assignment as = [&](const VarId& v) { return vals.at(v); };
        CHECK(composed.eval(as) == (bits != 0 ? 1 : 0));
    }

    DecisionTree grafted = tree_graft(composed, [](int label) {
        return DecisionTree::leaf(label + 10);
    });
    grafted.validate();
    std::map<VarId, bool> vals = {{x1, true}};
    Assignment as = [&](const VarId& v) { return vals.at(v); };
    CHECK(grafted.eval(as) == 11);
}

TEST_CASE("of_conjunct accepts exactly the conjunct") {
    VarId x1 = VarId::plain(1), x2 = VarId::plain(2);
    Conjunct c = Conjunct::make({x1}, {x2});
    DecisionTree t = DecisionTree::of_conjunct(c);
    t.validate();
    for (int bits = 0; bits < 4; ++bits) {
        std::map<VarId, bool> vals = {{x1, (bits & 1) != 0}, {x2, (bits & 2) != 0}};
        Assignment as = [&](const VarId& v) { return vals.at(v); };
        CHECK(t.eval(as) == (c.eval(as) ? 1 : 0));
    }
    CHECK(DecisionTree::of_conjunct(Conjunct::zero()).is_constant());
}
