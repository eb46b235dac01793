//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/abduction.hpp"
#include "abdux/error.hpp"
#include "fixtures.hpp"
#include "random_theories.hpp"

#include <doctest.h>

#include <algorithm>

using namespace abdux;
using fixtures::atoms;

namespace {

/// Agreement computed from scratch: full grounding, every stable model,
/// constraints checked over all constants in sight.
bool reference_agrees(const AbductiveTheory& t, const Observation& o, const Explanation& e, AgreementType type) {
    std::vector<Rule> program;
    for (const auto& r : t.program())
        if (!(r.is_fact() && e.del.contains(r.head))) program.push_back(r);
    for (const auto& a : e.add) program.push_back({a, {}, {}});
    ConstantSet dom = constants_of(o);
    for (const auto& r : program) {
        auto c = constants_of(r);
        dom.insert(c.begin(), c.end());
    }
    for (const auto& ic : t.constraints()) {
        auto c = constants_of(ic);
        dom.insert(c.begin(), c.end());
    }
    auto models = stable_models_bruteforce(ground(program));
    std::size_t n = models.size(), sat_c = 0, sat_o = 0, sat_both = 0, c_without_o = 0;
    for (const auto& m : models) {
        bool c = eval_constraints(m, t.constraints(), dom);
        bool obs = std::includes(m.begin(), m.end(), o.atoms.begin(), o.atoms.end());
        sat_c += c;
        sat_o += obs;
        sat_both += c && obs;
        c_without_o += c && !obs;
    }
    switch (type) {
    case AgreementType::A: return n > 0 && sat_c == n && sat_o == n;
    case AgreementType::B: return n > 0 && sat_o == n && sat_c > 0;
    case AgreementType::C: return sat_c > 0 && c_without_o == 0;
    case AgreementType::D: return sat_both > 0;
    }
    return false;
}

std::string types_of(const AbductiveTheory& t, const Observation& o, const Explanation& e,
                     const SemanticsOptions& opts = {}) {
    std::string s;
    for (auto type : all_agreement_types)
        if (is_explanation(t, o, e, type, opts)) s += to_char(type);
    return s;
}

} // namespace

TEST_CASE("agreement type names") {
    CHECK(parse_agreement("a") == AgreementType::A);
    CHECK(parse_agreement("D") == AgreementType::D);
    CHECK(to_char(AgreementType::C) == 'C');
    CHECK_THROWS_AS(parse_agreement("E"), ValidationError);
    CHECK_THROWS_AS(parse_agreement("AB"), ValidationError);
}

TEST_CASE("agreement conditions over per-model outcomes") {
    using M = std::vector<std::pair<bool, bool>>;
    const M all_good{{true, true}, {true, true}};
    const M one_violates_c{{true, true}, {false, true}};
    const M bad_model_misses_o{{true, true}, {false, false}};
    const M good_model_misses_o{{true, true}, {true, false}};
    const M none_satisfy_c{{false, true}, {false, false}};
    auto holds = [](const M& m, bool literal = false) {
        std::string s;
        for (auto t : all_agreement_types)
            if (agreement_holds(t, m, literal)) s += to_char(t);
        return s;
    };
    CHECK(holds(all_good) == "ABCD");
    CHECK(holds(one_violates_c) == "BCD");
    CHECK(holds(bad_model_misses_o) == "CD");
    CHECK(holds(good_model_misses_o) == "D");
    CHECK(holds(none_satisfy_c) == "");
    CHECK(holds(none_satisfy_c, true) == "C");
    CHECK(holds({}) == "");
    CHECK(holds({}, true) == "C");
}

TEST_CASE("the four types separate on two-model programs") {
    const Observation o{atoms("o.")};
    auto t1 = parse_theory("a :- not b. b :- not a. o :- a. o :- b.\n#ic :- b.");
    auto t2 = parse_theory("a :- not b. b :- not a. o :- a.\n#ic :- b.");
    auto t3 = parse_theory("a :- not b. b :- not a. o :- a.");
    auto t4 = parse_theory("a :- not b. b :- not a. o :- a.\n#ic :- a.\n#ic :- b.");
    CHECK(types_of(t1, o, {}) == "BCD");
    CHECK(types_of(t2, o, {}) == "CD");
    CHECK(types_of(t3, o, {}) == "D");
    CHECK(types_of(t4, o, {}) == "");
    SemanticsOptions literal;
    literal.agreement_c_literal = true;
    CHECK(types_of(t4, o, {}, literal) == "C");
}

TEST_CASE("an explanation of a stratified theory is of every type or none") {
    auto ex = fixtures::load("ski");
    CHECK(types_of(ex.theory, ex.observation, fixtures::explanation("ski")) == "ABCD");
    CHECK(types_of(ex.theory, ex.observation, {}) == "");
    for (auto stem : {"single_rule_d1", "single_rule_d2", "single_rule_d3", "single_rule_dx"}) {
        auto single = fixtures::load("single_rule");
        CHECK(types_of(single.theory, single.observation, fixtures::explanation(stem)) == "ABCD");
    }
}

TEST_CASE("structural failures are reported with a diagnostic") {
    auto ex = fixtures::load("single_rule");
    Explanation not_disjoint{atoms("p(3)."), atoms("p(3).")};
    auto v = is_explanation(ex.theory, ex.observation, not_disjoint, AgreementType::A);
    CHECK_FALSE(v);
    CHECK_FALSE(v.diagnostic.empty());
    Explanation del_outside_b{{}, atoms("q(4).")};
    v = is_explanation(ex.theory, ex.observation, del_outside_b, AgreementType::A);
    CHECK_FALSE(v);
    CHECK_FALSE(v.diagnostic.empty());
    CHECK_THROWS_AS(is_explanation(ex.theory, ex.observation, Explanation{atoms("t."), {}}, AgreementType::A),
                    ValidationError);
}

TEST_CASE("enumeration and stratified evaluation agree on stratified theories") {
    testing::Rng rng(5);
    SemanticsOptions forced;
    forced.force_enumeration = true;
    for (int i = 0; i < 60; ++i) {
        auto inst = testing::random_stratified(rng);
        auto e = testing::random_candidate(rng, inst.theory, 2, 1);
        for (auto type : all_agreement_types)
            CHECK(bool(is_explanation(inst.theory, inst.observation, e, type)) ==
                  bool(is_explanation(inst.theory, inst.observation, e, type, forced)));
    }
}

TEST_CASE("explanation checks match a from-scratch evaluation") {
    testing::Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        auto inst = i % 2 ? testing::random_stratified(rng) : testing::random_ground_normal(rng, 7, 3, 7, true);
        auto e = testing::random_candidate(rng, inst.theory, 2, 1);
        for (auto type : all_agreement_types) {
            INFO("instance " << i << " type " << to_char(type) << " candidate " << to_string(e));
            CHECK(bool(is_explanation(inst.theory, inst.observation, e, type)) ==
                  reference_agrees(inst.theory, inst.observation, e, type));
        }
    }
}

TEST_CASE("types are ordered from strongest to weakest") {
    testing::Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        auto inst = testing::random_ground_normal(rng, 8, 3, 9, true);
        auto e = testing::random_candidate(rng, inst.theory, 2, 1);
        std::vector<bool> holds;
        for (auto type : all_agreement_types) holds.push_back(is_explanation(inst.theory, inst.observation, e, type).value);
        for (std::size_t k = 1; k < holds.size(); ++k) CHECK((!holds[k - 1] || holds[k]));
    }
}

TEST_CASE("workspace checks agree with one-off checks") {
    testing::Rng rng(29);
    for (int i = 0; i < 40; ++i) {
        auto inst = testing::random_stratified(rng);
        std::vector<Explanation> cands;
        AtomSet additions;
        for (int k = 0; k < 8; ++k) {
            cands.push_back(testing::random_candidate(rng, inst.theory, 2, 1, false));
            additions.insert(cands.back().add.begin(), cands.back().add.end());
        }
        Workspace ws(inst.theory, inst.observation, additions);
        for (const auto& e : cands)
            for (auto type : all_agreement_types)
                CHECK(ws.explains(e, type) == is_explanation(inst.theory, inst.observation, e, type).value);
        if (!inst.theory.abducibles().empty()) {
            Explanation outside{atoms("p0(never_seen)."), {}};
            if (inst.theory.is_abducible(*outside.add.begin()))
                CHECK_THROWS_AS(ws.explains(outside, AgreementType::A), InvariantViolation);
        }
    }
}

TEST_CASE("inconsistent programs explain nothing") {
    auto t = parse_theory("#abducible e/0.\np :- not p, not e.\no :- e.");
    Observation o{atoms("o.")};
    CHECK(types_of(t, o, {}) == "");
    CHECK(types_of(t, o, Explanation{atoms("e."), {}}) == "ABCD");
}
