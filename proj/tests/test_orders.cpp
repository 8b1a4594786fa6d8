#include "lopsa/config.hpp"
#include "lopsa/formulas.hpp"
#include "lopsa/orders.hpp"
#include "lopsa/pe.hpp"

#include <doctest.h>

#include <set>

using namespace lopsa;

TEST_CASE("total orders validate and induce assignments") {
    TotalOrder z = TotalOrder::of({3, 1, 2});
    CHECK(z.first() == 3);
    CHECK(z.ranks() == std::vector<int>{1, 2, 0});
    Assignment a = z.assignment();
    CHECK(a(VarId::order(3, 1)));
    CHECK_FALSE(a(VarId::order(1, 3)));
    CHECK_FALSE(a(VarId::order(2, 2))); // diagonals read false

    CHECK_THROWS_AS(TotalOrder::of({1, 1, 2}), InvalidInputError);
    CHECK_THROWS_AS(TotalOrder::of({0, 1}), InvalidInputError);
    CHECK_THROWS_AS(TotalOrder::of({2, 3, 4}), InvalidInputError);
    CHECK(TotalOrder::of({}).n() == 0); // the unique order on no elements
}

TEST_CASE("restriction and assembly helpers") {
    TotalOrder z = TotalOrder::of({4, 2, 1, 3});
    CHECK(restrict_to(z, {1, 2, 3}) == std::vector<int>{2, 1, 3});
    CHECK(drop_element(z.seq, 2) == std::vector<int>{4, 1, 3});
    CHECK(prepend({2, 1}, {4, 3}) == TotalOrder::of({2, 1, 4, 3}));
    CHECK(seq_satisfies({2, 1, 3}, CanonicalTerm::of({2, 3}).conjunct()));
    CHECK_FALSE(seq_satisfies({2, 1, 3}, CanonicalTerm::of({3, 2}).conjunct()));
}

TEST_CASE("chain terms expand to chains and count consistently") {
    CanonicalTerm t = CanonicalTerm::of({2, 1, 3});
    CHECK(t.k() == 3);
    CHECK(t.degree() == 2);
    CHECK(t.support() == std::vector<int>{1, 2, 3});
    CHECK(t.conjunct() ==
          Conjunct::make({VarId::order(1, 3), VarId::order(2, 1)}));
    CHECK(count_consistent(t, 5) == factorial(5) / factorial(3));
    CHECK(count_satisfying(t.conjunct(), 5) == 20);

    CanonicalTerm stub = CanonicalTerm::of({1});
    CHECK(stub.degree() == 0);
    CHECK(stub.conjunct().is_unit());
    CHECK_THROWS_AS(CanonicalTerm::of({1, 1}), InvalidInputError);
}

TEST_CASE("order enumeration is lexicographic and complete") {
    std::vector<TotalOrder> all;
    for_each_order(3, [&](const TotalOrder& z) { all.push_back(z); });
    CHECK(all.size() == 6);
    CHECK(all.front() == TotalOrder::of({1, 2, 3}));
    CHECK(all.back() == TotalOrder::of({3, 2, 1}));
    CHECK(std::set<TotalOrder>(all.begin(), all.end()).size() == 6);

    auto not_first = orders_where(4, [](const TotalOrder& z) { return z.first() != 1; });
    CHECK(not_first.size() == 18);

    CHECK(orderings_of({2, 5}).size() == 2);
    CHECK(orderings_of({1, 2, 3}).size() == 6);
}

TEST_CASE("enumeration cap guards the order scans") {
    int old = config::enum_cap();
    config::set_enum_cap(3);
    CHECK_THROWS_AS(count_satisfying(Conjunct::unit(), 4), EnumerationBoundError);
    config::set_enum_cap(old);
}

TEST_CASE("expectation landmarks for the minimality axioms") {
    // pe[M_i] = (n-3)/2
    Rat expected[] = {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)};
    for (int n = 3; n <= 6; ++n) {
        PeEngine eng(n);
        AxiomFamily f = lop(n);
        for (int i = 1; i <= n; ++i)
            CHECK(eng.of_dnf(f.axiom("M" + std::to_string(i))) == expected[n - 3]);
    }
}

TEST_CASE("expectation of chain terms is 1/k!") {
    PeEngine eng(4);
    CHECK(eng.of_term(CanonicalTerm::of({2, 1, 3})) == Rat(1, 6));
    CHECK(eng.of_term(CanonicalTerm::of({4, 3})) == Rat(1, 2));
    CHECK(eng.of_term(CanonicalTerm::of({1})) == Rat(1));
    CHECK(eng.of_conjunct(CanonicalTerm::of({1, 2, 3, 4}).conjunct()) == Rat(1, 24));
}

TEST_CASE("expectation of a minimality axiom against a unit junta conjunct") {
    // pe[M1 * x(1,b)] = (n-2)/6 - 1/2
    PeEngine eng(4);
    AxiomFamily f = lop(4);
    ConicalJunta j = ConicalJunta::of(Conjunct::positive({VarId::order(1, 2)}), Rat(1));
    CHECK(eng.of_product(f.axiom("M1"), j) == Rat(-1, 6));

    PeEngine eng5(5);
    ConicalJunta j5 = ConicalJunta::of(Conjunct::positive({VarId::order(1, 3)}), Rat(1));
    CHECK(eng5.of_product(lop(5).axiom("M1"), j5) == Rat(0));
}

TEST_CASE("diagonal and negated order variables are handled exactly") {
    PeEngine eng(4);
    // x(i,i) never holds on an order
    CHECK(eng.of_conjunct(Conjunct::positive({VarId::order(2, 2)})) == Rat(0));
    // !x(1,2) holds on half the orders
    CHECK(eng.of_conjunct(Conjunct::make({}, {VarId::order(1, 2)})) == Rat(1, 2));
    // !x(i,i) always holds
    CHECK(eng.of_conjunct(Conjunct::make({}, {VarId::order(3, 3)})) == Rat(1));
}

TEST_CASE("k!-criterion reads the term count") {
    // two terms with k = 2: pe = 2/2! - 1 = 0
    NormalizedDnf nd = NormalizedDnf::make(
        2, {CanonicalTerm::of({2, 1}), CanonicalTerm::of({1, 2})});
    KfactReport r = kfact_criterion(nd, 4);
    CHECK(r.pe_value == Rat(0));
    CHECK(r.nonneg);
    CHECK(r.term_count == 2);
    CHECK(r.k_factorial == 2);
    CHECK_FALSE(r.rejected_not_starting_1.has_value());
}

TEST_CASE("negative non-weakenings exhibit a rejected order") {
    // single term [[2 1]]: pe = 1/2 - 1 < 0, and the order (1,2,..) is not
    // covered, but neither are some orders avoiding first place for 1
    NormalizedDnf nd = NormalizedDnf::make(2, {CanonicalTerm::of({2, 1})});
    KfactReport r = kfact_criterion(nd, 4);
    CHECK(r.pe_value == Rat(-1, 2));
    CHECK_FALSE(r.nonneg);
    REQUIRE(r.rejected_not_starting_1.has_value());
    CHECK(r.rejected_not_starting_1->first() != 1);
    CHECK_FALSE(nd.accepts(*r.rejected_not_starting_1));
}

TEST_CASE("sub-factorial weakenings are negative without a witness") {
    // all orderings of {1,2,3,4} except the identity: 23 terms, every order
    // not starting with 1 is accepted, yet pe = 23/24 - 1 < 0
    std::vector<CanonicalTerm> terms;
    for (const std::vector<int>& ord : orderings_of({1, 2, 3, 4}))
        if (ord != std::vector<int>{1, 2, 3, 4}) terms.push_back(CanonicalTerm::of(ord));
    NormalizedDnf nd = NormalizedDnf::make(4, terms);
    KfactReport r = kfact_criterion(nd, 4);
    CHECK(r.pe_value == Rat(-1, 24));
    CHECK_FALSE(r.nonneg);
    CHECK_FALSE(r.rejected_not_starting_1.has_value());
}

TEST_CASE("over-count identity, free and under a restriction") {
    NormalizedDnf nd = NormalizedDnf::make(
        2, {CanonicalTerm::of({2, 1}), CanonicalTerm::of({2, 1}), CanonicalTerm::of({1, 3})});
    OvercountReport free = overcount_identity(nd, 4);
    CHECK(free.identity_holds);
    CHECK(free.universe == 24);
    CHECK(free.pe_value == Rat(3, 2) - 1);
    CHECK(Rat(free.overcount) == free.pe_value * 24);

    // under a restriction every accepted order must extend the restriction,
    // so the terms carry the chain 1 < 4 themselves
    OvercountReport restricted = overcount_identity(
        NormalizedDnf::make(3, {CanonicalTerm::of({1, 4, 2}), CanonicalTerm::of({1, 4, 3})}),
        4, CanonicalTerm::of({1, 4}));
    CHECK(restricted.identity_holds);
    CHECK(restricted.universe == 12);
    CHECK(restricted.pe_value == Rat(-1, 6));
    CHECK(restricted.overcount == -4);
}

TEST_CASE("hit matrices index symmetric entries") {
    HitMatrix m;
    m.mode = HitMode::Pairs;
    m.index = {2, 3, 4};
    m.entries.assign(9, 0);
    m.entries[0 * 3 + 1] = 1; // (2,3)
    m.entries[1 * 3 + 0] = 1; // (3,2)
    m.entries[2 * 3 + 0] = 1; // (4,2)
    CHECK(m.at(2, 3));
    CHECK_FALSE(m.at(2, 4));
    CHECK(count_ones(m) == 3);
    CHECK(count_hitting(m) == 1);          // only {2,3} is mutual
    CHECK(hitting_floor(m) == Rat(3) - 3); // q - C(3,2)
}

TEST_CASE("hit structure extraction respects the floor") {
    // the minimal first-element axiom in normalized form: some element beats
    // 1, so the ascending order 1z is rejected as the pairs mode requires
    std::vector<CanonicalTerm> terms;
    for (int b = 2; b <= 4; ++b) terms.push_back(CanonicalTerm::of({b, 1}));
    NormalizedDnf nd = NormalizedDnf::make(2, terms);
    HitReport hr = hit_structures(nd, std::nullopt, {2, 3, 4}, HitMode::Pairs, 4);
    CHECK(hr.floor_ok);
    CHECK(Rat(hr.hits) >= hr.floor_bound);
    CHECK(hr.matrix.side() == 3);
    // each support {1,i} omits every other index element, so the matrix fills
    CHECK(hr.ones == 6);
    CHECK(hr.hits == 3);
}

TEST_CASE("weakening verification round-trips through the merged form") {
    // the normalized first-element axiom at n = 4 against the witness
    // [[1 2]]: a genuine weakening whose product pe is negative
    std::vector<CanonicalTerm> terms;
    for (int b = 2; b <= 4; ++b) terms.push_back(CanonicalTerm::of({b, 1}));
    NormalizedDnf nd = NormalizedDnf::make(2, terms);
    M1Report rep = verify_m1_nonneg(nd, CanonicalTerm::of({1, 2}), 4);
    CHECK(rep.is_weakening);
    CHECK_FALSE(rep.nonneg);
    CHECK(rep.pe_value == Rat(-1, 6));
    CHECK(rep.pe_value == rep.merged_pe);
    CHECK(rep.certificate.identity_holds);

    // keeping only (2,1) misses orders like (3,1,2,4)
    NormalizedDnf broken = NormalizedDnf::make(2, {CanonicalTerm::of({2, 1})});
    M1Report bad = verify_m1_nonneg(broken, CanonicalTerm::of({1, 2}), 4);
    CHECK_FALSE(bad.is_weakening);
    REQUIRE(bad.violating_order.has_value());
    CHECK(bad.violating_order->first() != 1);
    CHECK_FALSE(broken.accepts(*bad.violating_order));
}
