//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/abduction.hpp"

#include "abdux/error.hpp"
#include "abdux/parser.hpp"

#include <algorithm>
#include <cctype>

namespace abdux {

char to_char(AgreementType t) { return static_cast<char>('A' + static_cast<int>(t)); }

AgreementType parse_agreement(std::string_view s) {
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'D') return static_cast<AgreementType>(c - 'A');
    }
    throw ValidationError("agreement type must be one of A, B, C, D; got '" + std::string(s) + "'");
}

bool agreement_holds(AgreementType t, const std::vector<std::pair<bool, bool>>& per_model, bool c_literal) {
    bool any_c = false, all_c = true, all_o = true, any_co = false, all_c_implies_o = true;
    for (auto [c, o] : per_model) {
        any_c = any_c || c;
        all_c = all_c && c;
        all_o = all_o && o;
        any_co = any_co || (c && o);
        all_c_implies_o = all_c_implies_o && (!c || o);
    }
    bool consistent = !per_model.empty();
    switch (t) {
    case AgreementType::A: return consistent && all_c && all_o;
    case AgreementType::B: return consistent && all_o && any_c;
    case AgreementType::C: return (c_literal || any_c) && all_c_implies_o;
    case AgreementType::D: return any_co;
    }
    return false;
}

Workspace::Workspace(const AbductiveTheory& t, const Observation& o, const AtomSet& possible_additions,
                     SemanticsOptions opts)
    : opts_(opts) {
    AtomSet possible = t.abducible_facts();
    possible.insert(possible_additions.begin(), possible_additions.end());
    gp_ = ground_relevant(t.remainder(), possible);
    for (const auto& a : t.abducible_facts()) base_.push_back(*gp_.atoms.find(a));
    std::sort(base_.begin(), base_.end());

    AtomSet all;
    for (std::size_t i = 0; i < gp_.atoms.size(); ++i) all.insert(gp_.atoms.at(static_cast<int>(i)));
    auto ix = detail::index_facts(all);
    for (const auto& ic : t.constraints()) {
        detail::join(ic.body_pos, ix, [&](const detail::Binding& b) {
            GroundConstraint g;
            for (const auto& a : ic.body_pos) g.pos.push_back(*gp_.atoms.find(detail::substitute(a, b)));
            for (const auto& a : ic.body_neg)
                if (auto id = gp_.atoms.find(detail::substitute(a, b))) g.neg.push_back(*id);
            for (const auto& a : ic.head)
                if (auto id = gp_.atoms.find(detail::substitute(a, b))) g.head.push_back(*id);
            constraints_.push_back(std::move(g));
        });
    }
    for (const auto& a : o.atoms) {
        if (auto id = gp_.atoms.find(a))
            observation_.push_back(*id);
        else
            observation_possible_ = false;
    }
}

bool Workspace::satisfies_constraints(const ModelBits& m) const {
    auto in = [&](int a) { return m[static_cast<std::size_t>(a)] != 0; };
    for (const auto& g : constraints_) {
        if (!std::all_of(g.pos.begin(), g.pos.end(), in)) continue;
        if (std::any_of(g.neg.begin(), g.neg.end(), in)) continue;
        if (std::any_of(g.head.begin(), g.head.end(), in)) continue;
        return false;
    }
    return true;
}

bool Workspace::satisfies_observation(const ModelBits& m) const {
    if (!observation_possible_) return false;
    return std::all_of(observation_.begin(), observation_.end(),
                       [&](int a) { return m[static_cast<std::size_t>(a)] != 0; });
}

bool Workspace::explains(const std::vector<int>& add, const std::vector<int>& del, AgreementType t) const {
    thread_local std::vector<int> facts;
    thread_local ModelBits model;
    facts.clear();
    for (int b : base_)
        if (std::find(del.begin(), del.end(), b) == del.end()) facts.push_back(b);
    facts.insert(facts.end(), add.begin(), add.end());

    if (!uses_enumeration()) {
        evaluate_stratified(gp_, facts, model);
        bool c = satisfies_constraints(model), o = satisfies_observation(model);
        return agreement_holds(t, {{c, o}}, opts_.agreement_c_literal);
    }
    std::vector<std::pair<bool, bool>> per_model;
    for (const auto& m : stable_models_bits(gp_, facts, opts_.cap_atoms, Exec::serial()))
        per_model.emplace_back(satisfies_constraints(m), satisfies_observation(m));
    return agreement_holds(t, per_model, opts_.agreement_c_literal);
}

std::vector<int> Workspace::ids_of(const AtomSet& atoms) const {
    std::vector<int> out;
    for (const auto& a : atoms) {
        auto id = gp_.atoms.find(a);
        if (!id) throw InvariantViolation("atom " + to_string(a) + " is outside the grounded workspace");
        out.push_back(*id);
    }
    return out;
}

bool Workspace::explains(const Explanation& e, AgreementType t) const {
    return explains(ids_of(e.add), ids_of(e.del), t);
}

bool agrees(const std::vector<Rule>& program, const std::vector<IntegrityConstraint>& constraints,
            const Observation& o, AgreementType t, const SemanticsOptions& opts) {
    AbductiveTheory th(program, {}, constraints);
    Workspace ws(th, o, {}, opts);
    return ws.explains(std::vector<int>{}, std::vector<int>{}, t);
}

Verdict is_explanation(const AbductiveTheory& t, const Observation& o, const Explanation& e, AgreementType type,
                       const SemanticsOptions& opts) {
    validate_explanation(t, e);
    if (!e.disjoint()) return {false, "add and delete parts are not disjoint"};
    for (const auto& a : e.del)
        if (!t.abducible_facts().contains(a))
            return {false, "deleted atom " + to_string(a) + " is not a fact of the program"};
    Workspace ws(t, o, e.add, opts);
    if (ws.explains(e, type)) return {true, {}};
    return {false, std::string("observation does not agree (type ") + to_char(type) + ")"};
}

} // namespace abdux
