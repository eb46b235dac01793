//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/dimacs.hpp"
#include "abdux/parser.hpp"

#include <doctest.h>

using namespace abdux;

namespace {

ParseError::Kind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected a parse error");
    return ParseError::Kind::syntax;
}

} // namespace

TEST_CASE("theories parse rules, facts, abducibles and constraints") {
    auto t = parse_theory(R"(
        % comment
        #abducible q/1.
        #abducible s/0.
        q(a). r(1).
        p(X) :- q(X), not r(X).
        #ic p(X) | r(X) :- q(X), not s.
        #ic :- p(a).
    )");
    CHECK(t.abducibles().size() == 2);
    CHECK(t.abducible_facts() == AtomSet{ground_atom("q", {"a"})});
    CHECK(t.remainder().size() == 2);
    REQUIRE(t.constraints().size() == 2);
    CHECK(t.constraints()[0].head.size() == 2);
    CHECK(t.constraints()[1].head.empty());
}

TEST_CASE("printed theories parse back to the same theory") {
    auto t = parse_theory("#abducible q/2.\nq(a,b).\np(X) :- q(X,Y), not r(Y).\nr(b).\n#ic :- p(a), not r(a).\n");
    auto u = parse_theory(print_theory(t));
    CHECK(u.program() == t.program());
    CHECK(u.abducibles() == t.abducibles());
    CHECK(u.constraints() == t.constraints());
}

TEST_CASE("observations and explanations round-trip") {
    auto o = parse_observation("p(a). q.");
    CHECK(parse_observation(print_observation(o)).atoms == o.atoms);
    auto e = parse_explanation("#add q($0).\n#del q(a).\n");
    CHECK(e.add == AtomSet{ground_atom("q", {"$0"})});
    CHECK(parse_explanation(print_explanation(e)) == e);
}

TEST_CASE("parse errors carry a kind and a location") {
    CHECK(kind_of([] { parse_theory("p(X) :- not q(X)."); }) == ParseError::Kind::safety);
    CHECK(kind_of([] { parse_theory("#abducible q/1.\nq(X) :- r(X).\nr(a)."); }) == ParseError::Kind::abducible_head);
    CHECK(kind_of([] { parse_theory("p(a).\n#ic :- z(a)."); }) == ParseError::Kind::undeclared);
    CHECK(kind_of([] { parse_observation("p(X)."); }) == ParseError::Kind::non_ground);
    CHECK(kind_of([] { parse_explanation("#add q(a).\n#del q(a)."); }) == ParseError::Kind::overlap);
    CHECK(kind_of([] { parse_theory("p(a) :- q(a)"); }) == ParseError::Kind::syntax);
    CHECK(kind_of([] { parse_theory("p($0)."); }) == ParseError::Kind::syntax);
    CHECK(kind_of([] { parse_observation("p($1)."); }) == ParseError::Kind::syntax);
    try {
        parse_theory("p(a).\n  q(b) :- ,", "f.abd");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.span().file == "f.abd");
        CHECK(e.span().line == 2);
        CHECK(std::string(e.what()).rfind("f.abd:2:", 0) == 0);
    }
}

TEST_CASE("validation rejects abducible observations and non-abducible explanations") {
    auto t = parse_theory("#abducible q/1.\np(X) :- q(X).");
    CHECK_THROWS_AS(validate_observation(t, parse_observation("q(a).")), ValidationError);
    CHECK_NOTHROW(validate_observation(t, parse_observation("p(a).")));
    CHECK_THROWS_AS(validate_explanation(t, parse_explanation("#add p(a).")), ValidationError);
}

TEST_CASE("DIMACS CNF parsing") {
    auto cnf = parse_dimacs("c example\np cnf 3 2\n1 -2 0\n3 0\n");
    CHECK(cnf.num_vars == 3);
    CHECK(cnf.clauses == std::vector<Clause>{{1, -2}, {3}});
    CHECK(parse_dimacs(print_dimacs(cnf)) == cnf);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p dnf x\n"), ParseError);
}

TEST_CASE("QDIMACS parsing with an optional DNF matrix") {
    auto q = parse_qdimacs("p dnf 3 2\ne 1 0\na 2 0\n1 0\n-1 -2 0\n");
    CHECK(q.form == Qbf::Matrix::dnf);
    CHECK(q.exists == std::vector<int>{1, 3});
    CHECK(q.forall == std::vector<int>{2});
    CHECK(parse_qdimacs(print_qdimacs(q)) == q);
    auto c = parse_qdimacs("p cnf 2 1\na 2 0\n1 2 0\n");
    CHECK(c.form == Qbf::Matrix::cnf);
    CHECK(c.exists == std::vector<int>{1});
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n"), ParseError);
}
