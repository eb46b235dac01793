//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/error.hpp"
#include "abdux/semantics.hpp"

namespace abdux {

void evaluate_stratified(const GroundProgram& gp, const std::vector<int>& extra_facts, ModelBits& model) {
    if (!gp.flags.stratified) throw PreconditionError("program is not stratified");
    thread_local std::vector<int> counter;
    thread_local std::vector<int> stack;
    thread_local std::vector<int> ready;
    model.assign(gp.atoms.size(), 0);
    counter.assign(gp.rules.size(), 0);
    for (int f : extra_facts) model[static_cast<std::size_t>(f)] = 1;

    for (int s = 0; s < gp.num_strata; ++s) {
        stack.clear();
        const auto& rs = gp.rules_in_stratum(s);
        for (int r : rs) {
            const GroundRule& g = gp.rules[static_cast<std::size_t>(r)];
            bool blocked = false;
            for (int n : g.neg)
                if (model[static_cast<std::size_t>(n)]) {
                    blocked = true;
                    break;
                }
            if (blocked) {
                counter[static_cast<std::size_t>(r)] = -1;
                continue;
            }
            int c = 0;
            for (int p : g.pos) c += model[static_cast<std::size_t>(p)] ? 0 : 1;
            counter[static_cast<std::size_t>(r)] = c;
            if (c == 0) stack.push_back(g.head);
        }
        // Heads queued above are made true here, so every counter is
        // decremented exactly once per newly true body atom.
        ready.swap(stack);
        stack.clear();
        auto derive = [&](int h) {
            if (!model[static_cast<std::size_t>(h)]) {
                model[static_cast<std::size_t>(h)] = 1;
                stack.push_back(h);
            }
        };
        for (int h : ready) derive(h);
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int r : gp.watchers(a)) {
                const GroundRule& g = gp.rules[static_cast<std::size_t>(r)];
                if (gp.atom_stratum(g.head) != s) continue;
                int& c = counter[static_cast<std::size_t>(r)];
                if (c > 0 && --c == 0) derive(g.head);
            }
        }
    }
}

HerbrandModel stable_model_stratified(const GroundProgram& gp) {
    ModelBits bits;
    evaluate_stratified(gp, {}, bits);
    return to_model(gp, bits);
}

HerbrandModel to_model(const GroundProgram& gp, const ModelBits& bits) {
    HerbrandModel m;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) m.insert(gp.atoms.at(static_cast<int>(i)));
    return m;
}

bool eval_constraints(const HerbrandModel& m, const std::vector<IntegrityConstraint>& constraints,
                      const ConstantSet& active_domain) {
    if (constraints.empty()) return true;
    auto ix = detail::index_facts(m);
    for (const auto& ic : constraints) {
        bool violated = false;
        detail::join(ic.body_pos, ix, [&](const detail::Binding& b) {
            if (violated) return;
            for (const auto& [var, c] : b)
                if (!active_domain.contains(Constant(c))) return;
            for (const auto& n : ic.body_neg)
                if (m.contains(detail::substitute(n, b))) return;
            for (const auto& h : ic.head)
                if (m.contains(detail::substitute(h, b))) return;
            violated = true;
        });
        if (violated) return false;
    }
    return true;
}

bool entails_skeptical(const std::vector<HerbrandModel>& models, const AtomSet& phi) {
    if (models.empty()) throw InconsistentProgram("skeptical entailment over an inconsistent program");
    for (const auto& m : models)
        for (const auto& a : phi)
            if (!m.contains(a)) return false;
    return true;
}

} // namespace abdux
