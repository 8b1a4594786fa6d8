#include "lopsa/config.hpp"
#include "lopsa/covering.hpp"

#include <doctest.h>

#include <set>

using namespace lopsa;

TEST_CASE("cover sets enumerate the orders inducing their pattern") {
    CoverSet cs{{1, 3}, {3, 1}};
    cs.validate(4);
    std::vector<TotalOrder> in = covered(cs, 4);
    CHECK(in.size() == 12); // 4!/2!
    for (const TotalOrder& z : in) CHECK(restrict_to(z, {1, 3}) == std::vector<int>{3, 1});

    CHECK_THROWS_AS((CoverSet{{1, 3}, {3, 2}}.validate(4)), InvalidInputError);
    CHECK_THROWS_AS((CoverSet{{5}, {5}}.validate(4)), InvalidInputError); // d >= 2
}

TEST_CASE("full universe needs d! patterns") {
    for (int n = 3; n <= 5; ++n)
        for (int d = 2; d <= 3; ++d) {
            CoverResult r = min_cover({n, d, CoverUniverse::Ord, std::nullopt, false});
            CHECK(r.exact);
            CHECK(Int(r.size) == factorial(d));
        }
}

TEST_CASE("restricted universe minimums at degree 1 sets of size 2") {
    for (int n = 3; n <= 5; ++n) {
        CoverResult r = min_cover({n, 2, CoverUniverse::OrdStar1, std::nullopt, false});
        CHECK(r.exact);
        CHECK(r.size == 2);
    }
}

TEST_CASE("restricted universe support-3 landmarks") {
    // frozen minimums: 4 at n = 3, then 5 at n = 4
    CoverResult n3 = min_cover({3, 3, CoverUniverse::OrdStar1, std::nullopt, false});
    CHECK(n3.exact);
    CHECK(n3.size == 4);

    CoverResult n4 = min_cover({4, 3, CoverUniverse::OrdStar1, std::nullopt, false});
    CHECK(n4.exact);
    CHECK(n4.size == 5);

    // restricting candidate sets to those containing 1 does not hurt here
    CoverResult n4_one = min_cover({4, 3, CoverUniverse::OrdStar1, std::nullopt, true});
    CHECK(n4_one.exact);
    CHECK(n4_one.size == 5);
    for (const CoverSet& cs : n4_one.cover)
        CHECK(std::set<int>(cs.elements.begin(), cs.elements.end()).count(1) == 1);
}

TEST_CASE("returned covers actually cover") {
    CoverInstance inst{4, 3, CoverUniverse::OrdStar1, std::nullopt, false};
    CoverResult r = min_cover(inst);
    auto universe = orders_where(4, [](const TotalOrder& z) { return z.first() != 1; });
    for (const TotalOrder& z : universe) {
        bool hit = false;
        for (const CoverSet& cs : r.cover)
            if (restrict_to(z, cs.elements) == cs.ordering) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("term universe covers orders consistent with the term") {
    CoverInstance inst{4, 2, CoverUniverse::Term, CanonicalTerm::of({2, 1}), false};
    CoverResult r = min_cover(inst);
    CHECK(r.exact);
    CHECK(r.size >= 1);
    auto universe = orders_where(
        4, [](const TotalOrder& z) { return satisfies(z, CanonicalTerm::of({2, 1}).conjunct()); });
    for (const TotalOrder& z : universe) {
        bool hit = false;
        for (const CoverSet& cs : r.cover)
            if (restrict_to(z, cs.elements) == cs.ordering) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("initial bound prunes to nothing when too tight") {
    CoverResult r = min_cover({4, 3, CoverUniverse::OrdStar1, std::nullopt, false}, -1, 5);
    CHECK(r.exact);
    CHECK(r.cover.empty()); // minimum is 5, so nothing under 5 exists
}

TEST_CASE("node budget reports inexact when exhausted") {
    CoverResult r = min_cover({5, 3, CoverUniverse::OrdStar1, std::nullopt, false}, 1);
    CHECK_FALSE(r.exact);
}

TEST_CASE("lower-bound verdicts match the landmarks") {
    CHECK(verify_lower_bound(4, 2));        // 2 >= 2!
    CHECK_FALSE(verify_lower_bound(3, 3));  // 4 < 3!
    CHECK_FALSE(verify_lower_bound(4, 3));  // 5 < 3!
    CHECK(verify_lower_bound(5, 3));        // 6 >= 3!
}

TEST_CASE("sub-factorial hunt comes up empty at n = 4") {
    HuntOutcome h = hunt_sub_factorial(4);
    CHECK(h.status == HuntOutcome::Status::None);
    CHECK_THROWS_AS(hunt_sub_factorial(5), InvalidInputError);

    HuntOutcome capped = hunt_sub_factorial(6, 1);
    CHECK(capped.status == HuntOutcome::Status::Unknown);
}
