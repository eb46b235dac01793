//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/arbitrariness.hpp"
#include "abdux/error.hpp"
#include "abdux/search.hpp"
#include "fixtures.hpp"
#include "random_theories.hpp"

#include <doctest.h>

#include <bit>

using namespace abdux;
using fixtures::atoms;

namespace {

Occurrence occ(const char* atom, std::size_t k) { return {*atoms(std::string(atom) + ".").begin(), k}; }

ReplacementFunction fn(const char* c, std::initializer_list<Occurrence> os) { return {Constant(c), os}; }

std::size_t degree_of(const char* stem, const char* exp) {
    auto ex = fixtures::load(stem);
    return degree(ex.theory, ex.observation, fixtures::explanation(exp), AgreementType::A);
}

/// Largest pairwise-independent subfamily, by trying every subfamily.
std::size_t naive_degree(const std::vector<ReplacementFunction>& fs) {
    REQUIRE(fs.size() <= 16);
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1u << fs.size()); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < fs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < fs.size() && ok; ++j)
                if ((m >> i & 1) && (m >> j & 1)) ok = independent(fs[i], fs[j]);
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(m)));
    }
    return best;
}

} // namespace

TEST_CASE("occurrences of a constant") {
    auto e = atoms("p(1,2). s(2,3).");
    CHECK(occurrences(e, Constant("2")) == std::set<Occurrence>{occ("p(1,2)", 2), occ("s(2,3)", 1)});
    CHECK(occurrences(e, Constant("9")).empty());
    CHECK(occurrences(atoms("r(a,x,x)."), Constant("x")) == std::set<Occurrence>{occ("r(a,x,x)", 2), occ("r(a,x,x)", 3)});
    CHECK(all_occurrences(e).size() == 4);
}

TEST_CASE("applying replacement functions") {
    auto e = atoms("p(1,2). s(2,3).");
    const Constant xi("$0");
    CHECK(apply_replacement(fn("2", {occ("p(1,2)", 2)}), e, xi) ==
          AtomSet{ground_atom("p", {"1", "$0"}), ground_atom("s", {"2", "3"})});
    CHECK(apply_replacement(fn("2", {occ("p(1,2)", 2), occ("s(2,3)", 1)}), e, Constant("2")) == e);
    auto exx = atoms("q(a,x). r(a,x,x). t(a,x).");
    CHECK(apply_replacement(fn("x", {occ("q(a,x)", 2), occ("r(a,x,x)", 2)}), exx, xi) ==
          AtomSet{ground_atom("q", {"a", "$0"}), ground_atom("r", {"a", "$0", "x"}), ground_atom("t", {"a", "x"})});
    CHECK(apply_replacement(fn("a", {occ("q(a,x)", 1), occ("t(a,x)", 1)}), atoms("q(a,x). t(a,x)."), Constant("x")) ==
          atoms("q(x,x). t(x,x)."));
    CHECK(apply_replacement(fn("a", {occ("p(a,a)", 1), occ("p(a,a)", 2)}), atoms("p(a,a). p(x,x)."), Constant("x")) ==
          atoms("p(x,x)."));
    CHECK_THROWS_AS(apply_replacement(fn("2", {occ("p(9,2)", 2)}), e, xi), ValidationError);
    CHECK_THROWS_AS(apply_replacement(fn("2", {occ("p(1,2)", 1)}), e, xi), ValidationError);
}

TEST_CASE("independence of replacement functions") {
    auto c1 = fn("2", {occ("p(1,2)", 2)});
    auto c2 = fn("2", {occ("s(2,3)", 1)});
    auto c3 = fn("2", {occ("p(1,2)", 2), occ("s(2,3)", 1)});
    CHECK(independent(c1, c2));
    CHECK_FALSE(independent(c3, c1));
    CHECK_FALSE(independent(c3, c2));
    CHECK(independent(c3, fn("1", {occ("p(1,2)", 1)})));
}

TEST_CASE("degrees of the single-rule example") {
    CHECK(degree_of("single_rule", "single_rule_d1") == 0);
    CHECK(degree_of("single_rule", "single_rule_d2") == 0);
    CHECK(degree_of("single_rule", "single_rule_d3") == 1);
    CHECK(degree_of("single_rule", "single_rule_dx") == 1);
    auto ex = fixtures::load("single_rule");
    auto valid = valid_replacements(ex.theory, ex.observation, fixtures::explanation("single_rule_d3"), AgreementType::A);
    CHECK(valid == std::vector<ReplacementFunction>{fn("3", {occ("p(3)", 1)})});
    CHECK(valid_replacements(ex.theory, ex.observation, fixtures::explanation("single_rule_d1"), AgreementType::A).empty());
}

TEST_CASE("degrees of the chained-join example") {
    CHECK(degree_of("join", "join_x1x2") == 2);
    CHECK(degree_of("join", "join_xx") == 2);
    CHECK(degree_of("join", "join_x3") == 1);
    CHECK(degree_of("join", "join_delta") == 0);
    auto ex = fixtures::load("join");
    auto e = fixtures::explanation("join_xx");
    auto valid = valid_replacements(ex.theory, ex.observation, e, AgreementType::A);
    auto has = [&](const ReplacementFunction& f) { return std::find(valid.begin(), valid.end(), f) != valid.end(); };
    CHECK(has(fn("d", {occ("q(a,d)", 2), occ("r(a,d,d)", 2)})));
    CHECK(has(fn("d", {occ("r(a,d,d)", 3), occ("t(a,d)", 2)})));
    for (const auto& o : occurrences(e.add, Constant("d"))) CHECK_FALSE(has(ReplacementFunction{Constant("d"), {o}}));
}

TEST_CASE("degrees of the security example") {
    CHECK(degree_of("breach", "breach_tom") == 0);
    CHECK(degree_of("breach", "breach_mary") == 0);
    CHECK(degree_of("breach", "breach_dan") == 0);
    CHECK(degree_of("breach", "breach_v_dan") == 1);
    CHECK(degree_of("breach", "breach_s_tom") == 2);
    // Either half of the combined explanation still explains the breach on its
    // own, so each of warehouse, tom and dan admits two disjoint replacements.
    CHECK(degree_of("breach", "breach_tom_dan") == 6);
}

TEST_CASE("an empty add part has degree zero") {
    auto ex = fixtures::load("single_rule");
    Explanation d{{}, atoms("q(1).")};
    CHECK(degree(ex.theory, ex.observation, d, AgreementType::D) == 0);
    CHECK(is_constrained(ex.theory, ex.observation, d, AgreementType::D));
}

TEST_CASE("degree requires an explanation") {
    auto ex = fixtures::load("single_rule");
    CHECK_THROWS_AS(degree(ex.theory, ex.observation, Explanation{atoms("p(1)."), {}}, AgreementType::A),
                    PreconditionError);
}

TEST_CASE("occurrence cap") {
    auto ex = fixtures::load("join");
    ArbitrarinessOptions opts;
    opts.cap_occurrences = 5;
    CHECK_THROWS_AS(degree(ex.theory, ex.observation, fixtures::explanation("join_x1x2"), AgreementType::A, opts),
                    CapExceeded);
    opts.cap_occurrences = 7;
    CHECK(degree(ex.theory, ex.observation, fixtures::explanation("join_x1x2"), AgreementType::A, opts) == 2);
}

TEST_CASE("replacement constant avoids theory, observation and explanation") {
    auto t = parse_theory("#abducible p/1.\no :- p(X).");
    auto xi = replacement_constant(t, Observation{atoms("o.")}, {ground_atom("p", {"$0"}), ground_atom("p", {"$1"})});
    CHECK(xi == Constant("$2"));
    auto ex = fixtures::load("join");
    ArbitrarinessOptions opts;
    opts.xi = Constant("a");
    CHECK_THROWS_AS(degree(ex.theory, ex.observation, fixtures::explanation("join_x3"), AgreementType::A, opts),
                    ValidationError);
}

TEST_CASE("maximum disjoint packing") {
    CHECK(max_disjoint_packing({}) == 0);
    CHECK(max_disjoint_packing({0b0011, 0b0110, 0b0100, 0b1000}) == 3);
    CHECK(max_disjoint_packing({0b111, 0b011}) == 1);
    CHECK(max_disjoint_packing({0b1100, 0b0011, 0b0110}) == 2);
}

TEST_CASE("per-constant packing equals the best independent family") {
    testing::Rng rng(41);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 60; ++i) {
        auto inst = testing::random_stratified(rng);
        auto e = testing::random_candidate(rng, inst.theory, 3, 0);
        if (!is_explanation(inst.theory, inst.observation, e, AgreementType::A)) continue;
        auto valid = valid_replacements(inst.theory, inst.observation, e, AgreementType::A);
        if (valid.size() > 16) continue;
        ++checked;
        CHECK(degree_of(valid) == naive_degree(valid));
        CHECK(degree(inst.theory, inst.observation, e, AgreementType::A) == naive_degree(valid));
        CHECK(is_constrained(inst.theory, inst.observation, e, AgreementType::A) == valid.empty());
    }
    CHECK(checked >= 20);
}

TEST_CASE("choice of replacement constant is immaterial") {
    testing::Rng rng(43);
    for (int i = 0; i < 150; ++i) {
        auto inst = testing::random_stratified(rng);
        auto e = testing::random_candidate(rng, inst.theory, 3, 1);
        if (!is_explanation(inst.theory, inst.observation, e, AgreementType::B)) continue;
        ArbitrarinessOptions other;
        other.xi = Constant("brand_new");
        CHECK(valid_replacements(inst.theory, inst.observation, e, AgreementType::B) ==
              valid_replacements(inst.theory, inst.observation, e, AgreementType::B, other));
    }
}

TEST_CASE("the delete part does not contribute occurrences") {
    auto ex = fixtures::load("single_rule");
    Explanation d{atoms("p(3)."), atoms("q(3). q(1).")};
    REQUIRE(is_explanation(ex.theory, ex.observation, d, AgreementType::A));
    for (const auto& f : valid_replacements(ex.theory, ex.observation, d, AgreementType::A))
        for (const auto& o : f.occurrences) CHECK(d.add.contains(o.atom));
}
