//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "random_theories.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace abdux::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

struct Pred {
    std::string name;
    std::size_t arity;
    int level;
    bool abducible;
};

Atom ground(Rng& rng, const Pred& p, const std::vector<std::string>& consts) {
    Atom a(p.name);
    for (std::size_t i = 0; i < p.arity; ++i) a.args.push_back(Term::constant(pick(rng, consts)));
    return a;
}

/// Positive literal with variables from `vars` or constants.
Atom pattern(Rng& rng, const Pred& p, const std::vector<std::string>& vars, const std::vector<std::string>& consts,
             double const_prob) {
    Atom a(p.name);
    for (std::size_t i = 0; i < p.arity; ++i)
        a.args.push_back(coin(rng, const_prob) ? Term::constant(pick(rng, consts)) : Term::variable(pick(rng, vars)));
    return a;
}

std::vector<std::string> vars_of(const std::vector<Atom>& atoms) {
    std::set<std::string> s;
    for (const auto& a : atoms)
        for (const auto& t : a.args)
            if (t.is_variable()) s.insert(t.name());
    return {s.begin(), s.end()};
}

/// Atom whose variables all come from `bound` (constants if none).
Atom bounded(Rng& rng, const Pred& p, const std::vector<std::string>& bound, const std::vector<std::string>& consts) {
    if (bound.empty()) return ground(rng, p, consts);
    return pattern(rng, p, bound, consts, 0.2);
}

std::vector<std::string> constants(int n) {
    std::vector<std::string> c;
    for (int i = 0; i < n; ++i) c.push_back("c" + std::to_string(i));
    return c;
}

} // namespace

Instance random_stratified(Rng& rng, const StratifiedShape& shape) {
    auto consts = constants(uniform(rng, 2, shape.max_constants));
    int np = uniform(rng, 3, shape.max_predicates);
    int nabd = uniform(rng, 1, std::min(2, np - 2));
    std::vector<Pred> preds;
    for (int i = 0; i < np; ++i) {
        bool abd = i < nabd;
        int level = i <= nabd ? 0 : uniform(rng, 1, 3);
        preds.push_back({"p" + std::to_string(i), static_cast<std::size_t>(uniform(rng, 0, 2)), level, abd});
    }
    std::vector<Rule> program;
    std::set<PredicateSig> abducibles;
    for (const auto& p : preds) {
        if (p.abducible) abducibles.insert({p.name, p.arity});
        if (p.level == 0)
            for (int k = uniform(rng, 0, 3); k > 0; --k) program.push_back({ground(rng, p, consts), {}, {}});
    }
    const std::vector<std::string> pool{"X", "Y", "Z"};
    int rules = 0;
    for (const auto& p : preds) {
        if (p.level == 0) continue;
        for (int k = uniform(rng, 1, 2); k > 0 && rules < shape.max_rules; --k, ++rules) {
            Rule r;
            std::vector<Pred> lower_eq, lower;
            for (const auto& q : preds) {
                if (q.level <= p.level) lower_eq.push_back(q);
                if (q.level < p.level) lower.push_back(q);
            }
            for (int b = uniform(rng, 1, 2); b > 0; --b) r.body_pos.push_back(pattern(rng, pick(rng, lower_eq), pool, consts, 0.2));
            auto bound = vars_of(r.body_pos);
            if (coin(rng, 0.5)) r.body_neg.push_back(bounded(rng, pick(rng, lower), bound, consts));
            r.head = bounded(rng, p, bound, consts);
            program.push_back(std::move(r));
        }
    }
    std::vector<IntegrityConstraint> ics;
    if (shape.constraints && coin(rng, 0.5)) {
        IntegrityConstraint ic;
        ic.body_pos.push_back(pattern(rng, pick(rng, preds), pool, consts, 0.2));
        auto bound = vars_of(ic.body_pos);
        if (coin(rng, 0.6)) ic.head.push_back(bounded(rng, pick(rng, preds), bound, consts));
        if (coin(rng, 0.3)) ic.body_neg.push_back(bounded(rng, pick(rng, preds), bound, consts));
        ics.push_back(std::move(ic));
    }
    Instance inst{AbductiveTheory(program, abducibles, ics), {}};
    std::vector<Pred> observable;
    for (const auto& p : preds)
        if (!p.abducible) observable.push_back(p);
    for (int k = uniform(rng, 1, 2); k > 0; --k) inst.observation.atoms.insert(ground(rng, pick(rng, observable), consts));
    return inst;
}

Instance random_ground_normal(Rng& rng, int atoms, int abducibles, int rules, bool constraints) {
    auto name = [](int i) { return Atom("a" + std::to_string(i)); };
    std::vector<Rule> program;
    std::set<PredicateSig> abd;
    for (int i = 0; i < abducibles; ++i) {
        abd.insert({"a" + std::to_string(i), 0});
        if (coin(rng, 0.4)) program.push_back({name(i), {}, {}});
    }
    for (int k = 0; k < rules; ++k) {
        Rule r{name(uniform(rng, abducibles, atoms - 1)), {}, {}};
        for (int b = uniform(rng, 0, 2); b > 0; --b) r.body_pos.push_back(name(uniform(rng, 0, atoms - 1)));
        for (int b = uniform(rng, 0, 2); b > 0; --b) r.body_neg.push_back(name(uniform(rng, 0, atoms - 1)));
        program.push_back(std::move(r));
    }
    std::vector<IntegrityConstraint> ics;
    if (constraints && coin(rng, 0.6)) {
        IntegrityConstraint ic;
        ic.body_pos.push_back(name(uniform(rng, 0, atoms - 1)));
        if (coin(rng, 0.5)) ic.head.push_back(name(uniform(rng, 0, atoms - 1)));
        if (coin(rng, 0.3)) ic.body_neg.push_back(name(uniform(rng, 0, atoms - 1)));
        ics.push_back(std::move(ic));
    }
    Instance inst{AbductiveTheory(program, abd, ics), {}};
    inst.observation.atoms.insert(name(uniform(rng, abducibles, atoms - 1)));
    return inst;
}

std::vector<Rule> random_ground_stratified(Rng& rng, int atoms, int rules) {
    auto name = [](int i) { return Atom("a" + std::to_string(i)); };
    std::vector<Rule> program;
    for (int k = 0; k < rules; ++k) {
        int h = uniform(rng, 0, atoms - 1);
        Rule r{name(h), {}, {}};
        for (int b = uniform(rng, 0, 2); b > 0; --b) r.body_pos.push_back(name(uniform(rng, 0, h)));
        if (h > 0)
            for (int b = uniform(rng, 0, 2); b > 0; --b) r.body_neg.push_back(name(uniform(rng, 0, h - 1)));
        program.push_back(std::move(r));
    }
    return program;
}

Instance random_horn(Rng& rng, const HornShape& shape) {
    auto consts = constants(shape.constants);
    std::vector<Pred> base{{"a0", 1, 0, true}, {"a1", 2, 0, true}, {"e", 2, 0, false}};
    if (coin(rng, 0.5)) base.push_back({"a2", 0, 0, true});
    std::vector<Pred> all = base;
    std::vector<Rule> program;
    const std::vector<std::string> pool{"X", "Y", "Z"};
    for (int layer = 1; layer <= shape.layers; ++layer) {
        std::vector<Pred> fresh;
        for (int k = 0; k < shape.rules_per_layer; ++k)
            fresh.push_back({"d" + std::to_string(layer) + "_" + std::to_string(k), static_cast<std::size_t>(uniform(rng, 1, 2)),
                             layer, false});
        for (const auto& p : fresh) {
            for (int alt = uniform(rng, 1, 2); alt > 0; --alt) {
                Rule r;
                for (int b = uniform(rng, 1, 3); b > 0; --b) r.body_pos.push_back(pattern(rng, pick(rng, all), pool, consts, 0.1));
                auto bound = vars_of(r.body_pos);
                r.head = bounded(rng, p, bound, consts);
                program.push_back(std::move(r));
            }
        }
        all.insert(all.end(), fresh.begin(), fresh.end());
    }
    std::set<PredicateSig> abd;
    std::vector<Pred> facts_of;
    for (const auto& p : base) {
        if (p.abducible) abd.insert({p.name, p.arity});
        if (p.arity > 0) facts_of.push_back(p);
    }
    std::set<Atom> facts;
    for (int guard = 0; static_cast<int>(facts.size()) < shape.facts && guard < shape.facts * 20; ++guard)
        facts.insert(ground(rng, pick(rng, facts_of), consts));
    for (const auto& f : facts) program.push_back({f, {}, {}});
    Instance inst{AbductiveTheory(program, abd, {}), {}};
    std::vector<Pred> top(all.end() - shape.rules_per_layer, all.end());
    inst.observation.atoms.insert(ground(rng, pick(rng, top), consts));
    return inst;
}

Explanation random_candidate(Rng& rng, const AbductiveTheory& t, std::size_t max_add, std::size_t max_del,
                             bool outside) {
    std::vector<std::string> consts;
    for (const auto& c : constants_of(t)) consts.push_back(c.name());
    if (outside || consts.empty()) consts.push_back("zz");
    std::vector<PredicateSig> sigs(t.abducibles().begin(), t.abducibles().end());
    Explanation e;
    if (!sigs.empty())
        for (int k = uniform(rng, 0, static_cast<int>(max_add)); k > 0; --k) {
            const auto& s = pick(rng, sigs);
            e.add.insert(ground(rng, {s.name, s.arity, 0, true}, consts));
        }
    std::vector<Atom> b(t.abducible_facts().begin(), t.abducible_facts().end());
    if (!b.empty())
        for (int k = uniform(rng, 0, static_cast<int>(max_del)); k > 0; --k) {
            Atom a = pick(rng, b);
            if (!e.add.contains(a)) e.del.insert(a);
        }
    return e;
}

Qbf random_dnf_qbf(Rng& rng, int nx, int ny, int terms) {
    Qbf q;
    q.num_vars = nx + ny;
    for (int v = 1; v <= nx; ++v) q.exists.push_back(v);
    for (int v = nx + 1; v <= nx + ny; ++v) q.forall.push_back(v);
    q.form = Qbf::Matrix::dnf;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> vars;
        for (int v = 1; v <= q.num_vars; ++v) vars.push_back(v);
        std::shuffle(vars.begin(), vars.end(), rng);
        Clause term;
        for (int i = uniform(rng, 1, std::min(3, q.num_vars)); i > 0; --i) {
            int v = vars[static_cast<std::size_t>(i - 1)];
            term.push_back(coin(rng, 0.5) ? v : -v);
        }
        std::sort(term.begin(), term.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        q.matrix.push_back(std::move(term));
    }
    return q;
}

} // namespace abdux::testing
