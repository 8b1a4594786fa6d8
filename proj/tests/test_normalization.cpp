#include "lopsa/config.hpp"
#include "lopsa/normalization.hpp"
#include "lopsa/pe.hpp"

#include <doctest.h>

using namespace lopsa;

namespace {

Rat brute_pe(const Dnf& d, int n) {
    Int total = 0;
    for_each_order(n, [&](const TotalOrder& z) { total += d.satisfied_terms(z.assignment()); });
    Rat r(Int(total - factorial(n)), factorial(n));
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("negation elimination on order variables") {
    VarId ab = VarId::order(1, 2);
    // !x(1,2) becomes x(2,1) on orders
    Conjunct t = Conjunct::make({}, {ab});
    CHECK(eliminate_negations(t) == Conjunct::positive({VarId::order(2, 1)}));

    // diagonal negations drop; positive diagonals are unsatisfiable
    CHECK(eliminate_negations(Conjunct::make({ab}, {VarId::order(3, 3)})) ==
          Conjunct::positive({ab}));
    CHECK(eliminate_negations(Conjunct::positive({VarId::order(2, 2)})).is_zero());
    CHECK(eliminate_negations(Conjunct::zero()).is_zero());
}

TEST_CASE("term expansion partitions the accepted orders") {
    Conjunct t = Conjunct::positive({VarId::order(2, 1)});
    std::vector<CanonicalTerm> expansion = normalize_term(t, 3, 4);
    // support {1,2} padded with 3: the orderings of {1,2,3} with 2 before 1
    CHECK(expansion.size() == 3);
    Int total = 0;
    for (const CanonicalTerm& ct : expansion) {
        CHECK(ct.k() == 3);
        CHECK(ct.contains(1));
        total += count_satisfying(ct.conjunct(), 4);
    }
    CHECK(total == count_satisfying(t, 4));

    // chains satisfied by no order expand to nothing
    Conjunct cyc = Conjunct::positive({VarId::order(1, 2), VarId::order(2, 1)});
    CHECK(normalize_term(cyc, 3, 4).empty());
}

TEST_CASE("whole-DNF normalization preserves acceptance and expectation") {
    Dnf w;
    w.add(Conjunct::make({VarId::order(2, 1)}, {VarId::order(3, 1)}));
    w.add(Conjunct::positive({VarId::order(4, 2)}));

    int n = 4;
    NormalizedDnf nd = normalize_dnf(w, n);
    CHECK(nd.support_size <= 2 * w.degree() + 1);
    for (const CanonicalTerm& t : nd.terms) CHECK(t.contains(1));

    bool agree = true;
    for_each_order(n, [&](const TotalOrder& z) {
        if (w.eval(z.assignment()) != nd.accepts(z)) agree = false;
    });
    CHECK(agree);

    PeEngine eng(n);
    CHECK(eng.of_normalized(nd) == brute_pe(w, n));
    CHECK(eng.of_normalized(nd) == eng.of_dnf(nd.to_dnf()));
}

TEST_CASE("normalization options control the support size") {
    Dnf w;
    w.add(Conjunct::positive({VarId::order(2, 1)}));

    NormalizedDnf minimal = normalize_dnf(w, 5);
    CHECK(minimal.support_size == 2); // {1,2} already contains 1

    NormalizeOptions forced;
    forced.support_size = 3;
    CHECK(normalize_dnf(w, 5, forced).support_size == 3);

    NormalizeOptions full;
    full.full_padding = true;
    CHECK(normalize_dnf(w, 5, full).support_size == 2 * w.degree() + 1);

    NormalizeOptions too_small;
    too_small.support_size = 1;
    CHECK_THROWS_AS(normalize_dnf(w, 5, too_small), InvalidInputError);
}

TEST_CASE("normalized DNFs enforce their shape") {
    CHECK_THROWS_AS(NormalizedDnf::make(2, {CanonicalTerm::of({2, 3})}),
                    InvalidInputError); // support misses 1
    CHECK_THROWS_AS(NormalizedDnf::make(3, {CanonicalTerm::of({2, 1})}),
                    InvalidInputError); // size mismatch
    NormalizedDnf ok = NormalizedDnf::make(2, {CanonicalTerm::of({2, 1})});
    CHECK(ok.degree() == 1);
    CHECK(ok.accepting_terms(TotalOrder::of({2, 1, 3})) == 1);
}

TEST_CASE("merge rewrites a product as a shifted expectation") {
    NormalizedDnf nd = NormalizedDnf::make(
        2, {CanonicalTerm::of({2, 1}), CanonicalTerm::of({3, 1}), CanonicalTerm::of({1, 3})});
    CanonicalTerm t = CanonicalTerm::of({1, 4});
    int n = 5;

    NormalizedDnf merged = merge(nd, t, n);
    PeEngine eng(n);
    ConicalJunta jt = ConicalJunta::of(t.conjunct(), Rat(1));
    Rat lhs = eng.of_product(nd.to_dnf(), jt);
    Rat rhs = eng.of_normalized(merged) + Rat(1) - eng.of_term(t);
    CHECK(lhs == rhs);

    // t must put 1 first
    CHECK_THROWS_AS(merge(nd, CanonicalTerm::of({4, 1}), n), InvalidInputError);
}

TEST_CASE("witness extraction finds a negative product term") {
    // M1 at n = 4 against the junta x(1,2): the product is negative, so a
    // witness term with 1 first and negative product must come out
    int n = 4;
    Dnf m1;
    for (int j = 2; j <= n; ++j) m1.add(Conjunct::positive({VarId::order(j, 1)}));
    ConicalJunta j = ConicalJunta::of(Conjunct::positive({VarId::order(1, 2)}), Rat(1));

    PeEngine eng(n);
    REQUIRE(eng.of_product(m1, j) < 0);

    auto witness = extract_witness_term(m1, j, n);
    REQUIRE(witness.has_value());
    CHECK(witness->order.front() == 1);
    CHECK(witness->k() <= 2 * j.degree() + 1);
    ConicalJunta jw = ConicalJunta::of(witness->conjunct(), Rat(1));
    CHECK(eng.of_product(m1, jw) < 0);

    // nonnegative products yield no witness
    ConicalJunta trivial = ConicalJunta::of(Conjunct::positive({VarId::order(2, 1)}), Rat(1));
    REQUIRE(eng.of_product(m1, trivial) >= 0);
    CHECK_FALSE(extract_witness_term(m1, trivial, n).has_value());
}
