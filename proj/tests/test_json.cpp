#include "lopsa/json_io.hpp"

#include "lopsa/config.hpp"

#include <doctest.h>

using namespace lopsa;

namespace {

template <typename T>
T round_trip(const T& value) {
    Json j = value;
    return j.get<T>();
}

template <typename T>
std::string canon(const T& value) {
    Json j = value;
    return dump_canonical(j);
}

} // namespace

TEST_CASE("variable tokens") {
    CHECK(var_to_token(VarId::order(2, 7)) == "x(2,7)");
    CHECK(var_to_token(VarId::plain(12)) == "x12");
    CHECK(var_from_token("x(2,7)") == VarId::order(2, 7));
    CHECK(var_from_token("x12") == VarId::plain(12));
    CHECK_THROWS_AS(var_from_token("y3"), InvalidInputError);
    CHECK_THROWS_AS(var_from_token("x(1)"), InvalidInputError);
    CHECK_THROWS_AS(var_from_token(""), InvalidInputError);
}

TEST_CASE("rationals and integers serialize as decimal strings") {
    CHECK(rat_to_json(rat_from_string("-4/6")) == Json("-2/3"));
    CHECK(rat_from_json(Json("5/10")) == Rat(1, 2));
    CHECK(rat_from_json(Json(7)) == Rat(7)); // bare JSON integers accepted
    CHECK(int_from_json(int_to_json(factorial(30))) == factorial(30));
    CHECK_THROWS_AS(rat_from_json(Json("1/0")), InvalidInputError);
}

TEST_CASE("formula payloads round-trip") {
    Conjunct t = Conjunct::make({VarId::order(2, 1)}, {VarId::order(1, 3)});
    CHECK(round_trip(t) == t);
    CHECK(round_trip(Conjunct::zero()) == Conjunct::zero());

    Dnf d;
    d.add(t);
    d.add(Conjunct::unit());
    CHECK(round_trip(d) == d);

    ConicalJunta j;
    j.add(t, Rat(3, 2));
    j.add(Conjunct::unit(), Rat(1));
    CHECK(round_trip(j) == j);

    Polynomial p;
    p.add_term({VarId::order(1, 2)}, Rat(-1, 3));
    p.add_term({}, Rat(2));
    CHECK(round_trip(p) == p);

    CHECK(round_trip(TotalOrder::of({3, 1, 2})) == TotalOrder::of({3, 1, 2}));
    CHECK(round_trip(CanonicalTerm::of({2, 1, 4})) == CanonicalTerm::of({2, 1, 4}));

    NormalizedDnf nd = NormalizedDnf::make(2, {CanonicalTerm::of({2, 1})});
    CHECK(round_trip(nd) == nd);
}

TEST_CASE("families and proofs round-trip") {
    AxiomFamily f = lop(3);
    AxiomFamily f2 = round_trip(f);
    CHECK(canon(f) == canon(f2));

    SAProof p = least_number_refutation(4);
    CHECK(round_trip(p) == p);

    AxiomFamily ln = least_number(4);
    CHECK(canon(round_trip(ln)) == canon(ln));
}

TEST_CASE("malformed payloads are rejected, not absorbed") {
    CHECK_THROWS(Json::parse(R"({"terms": 3})").get<Dnf>());
    // negative multiplicity breaks the conical invariant
    CHECK_THROWS(Json::parse(
                     R"({"entries":[{"conjunct":{"pos":[],"neg":[]},"mult":"-1"}]})")
                     .get<ConicalJunta>());
    // order variables must stay inside the declared universe
    CHECK_THROWS(Json::parse(
                     R"js({"name":"f","universe":{"order_n":2,"plain_m":0},
                         "axioms":[{"label":"A","dnf":{"terms":[{"pos":["x(3,1)"],"neg":[]}]}}]})js")
                     .get<AxiomFamily>());
    // duplicate support in a chain term
    CHECK_THROWS(Json::parse(R"([1,1,2])").get<CanonicalTerm>());
}

TEST_CASE("decision structures round-trip") {
    DecisionTree t = DecisionTree::query(VarId::plain(1), DecisionTree::leaf(0),
                                         DecisionTree::reader(VarId::plain(2)));
    CHECK(round_trip(t) == t);

    SearchProblem p;
    p.input_bits = 2;
    p.outputs = {"a", "b"};
    p.witnesses = 1;
    p.relation = {{DecisionTree::reader(VarId::plain(1))},
                  {DecisionTree::query(VarId::plain(1), DecisionTree::leaf(1),
                                       DecisionTree::leaf(0))}};
    CHECK(canon(round_trip(p)) == canon(p));

    Formulation phi;
    phi.f = {DecisionTree::reader(VarId::plain(1)), DecisionTree::reader(VarId::plain(2))};
    phi.g = {DecisionTree::leaf(0), DecisionTree::leaf(1)};
    CHECK(canon(round_trip(phi)) == canon(phi));

    CounterExampleFormulation ce;
    ce.base = phi;
    ce.h = {{DecisionTree::leaf(0)}, {DecisionTree::leaf(0)}};
    CHECK(canon(round_trip(ce)) == canon(ce));

    // a path may not query one variable twice
    CHECK_THROWS(Json::parse(R"({"var":"x1","lo":{"leaf":0},"hi":{"var":"x1",
        "lo":{"leaf":0},"hi":{"leaf":1}}})")
                     .get<DecisionTree>());
}

TEST_CASE("canonical dump is stable and newline-terminated") {
    Json j = Json{{"b", 1}, {"a", 2}};
    std::string s = dump_canonical(j);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"a\"") < s.find("\"b\"")); // keys sorted
    CHECK(dump_canonical(j) == s);
}
