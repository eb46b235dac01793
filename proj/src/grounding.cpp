//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/error.hpp"
#include "abdux/semantics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace abdux {

int AtomTable::intern(const Atom& a) {
    auto [it, inserted] = index_.try_emplace(a, static_cast<int>(atoms_.size()));
    if (inserted) atoms_.push_back(a);
    return it->second;
}

std::optional<int> AtomTable::find(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int DependencyGraph::index_of(const PredicateSig& s) const {
    auto it = std::find(predicates.begin(), predicates.end(), s);
    return it == predicates.end() ? -1 : static_cast<int>(it - predicates.begin());
}

namespace {

std::string pred_key(const Atom& a) { return a.predicate + "/" + std::to_string(a.arity()); }

DependencyGraph build_graph(const std::vector<Rule>& source) {
    DependencyGraph g;
    std::map<PredicateSig, int> ix;
    auto node = [&](const Atom& a) {
        auto [it, ins] = ix.try_emplace(a.signature(), static_cast<int>(g.predicates.size()));
        if (ins) {
            g.predicates.push_back(a.signature());
            g.edges.emplace_back();
        }
        return it->second;
    };
    for (const auto& r : source) {
        int h = node(r.head);
        for (const auto& b : r.body_pos) g.edges[static_cast<std::size_t>(node(b))].push_back({h, false});
        for (const auto& b : r.body_neg) g.edges[static_cast<std::size_t>(node(b))].push_back({h, true});
    }
    return g;
}

struct Tarjan {
    const DependencyGraph& g;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int counter = 0, ncomp = 0;

    explicit Tarjan(const DependencyGraph& graph)
        : g(graph), index(graph.predicates.size(), -1), low(graph.predicates.size(), 0),
          comp(graph.predicates.size(), -1), on_stack(graph.predicates.size(), false) {
        for (std::size_t v = 0; v < g.predicates.size(); ++v)
            if (index[v] < 0) visit(static_cast<int>(v));
    }

    void visit(int v) {
        auto uv = static_cast<std::size_t>(v);
        index[uv] = low[uv] = counter++;
        stack.push_back(v);
        on_stack[uv] = true;
        for (const auto& e : g.edges[uv]) {
            auto w = static_cast<std::size_t>(e.to);
            if (index[w] < 0) {
                visit(e.to);
                low[uv] = std::min(low[uv], low[w]);
            } else if (on_stack[w]) {
                low[uv] = std::min(low[uv], index[w]);
            }
        }
        if (low[uv] == index[uv]) {
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = false;
                comp[static_cast<std::size_t>(w)] = ncomp;
            } while (w != v);
            ++ncomp;
        }
    }
};

} // namespace

void GroundProgram::finalize(const std::vector<Rule>& source) {
    graph = build_graph(source);
    Tarjan t(graph);
    std::size_t np = graph.predicates.size();
    // Tarjan numbers components sinks first; edges run body -> head, so
    // reversing gives bodies before heads.
    predicate_stratum.assign(np, 0);
    for (std::size_t v = 0; v < np; ++v) predicate_stratum[v] = t.ncomp - 1 - t.comp[v];
    num_strata = std::max(1, t.ncomp);

    flags.stratified = true;
    flags.non_recursive = true;
    flags.horn = true;
    for (const auto& r : source)
        if (!r.body_neg.empty()) flags.horn = false;
    std::vector<int> comp_size(static_cast<std::size_t>(std::max(1, t.ncomp)), 0);
    for (std::size_t v = 0; v < np; ++v) ++comp_size[static_cast<std::size_t>(t.comp[v])];
    for (std::size_t v = 0; v < np; ++v) {
        if (comp_size[static_cast<std::size_t>(t.comp[v])] > 1) flags.non_recursive = false;
        for (const auto& e : graph.edges[v]) {
            if (t.comp[static_cast<std::size_t>(e.to)] != t.comp[v]) continue;
            flags.non_recursive = false;
            if (e.negative) flags.stratified = false;
        }
    }

    atom_stratum_.assign(atoms.size(), 0);
    std::map<PredicateSig, int> strat;
    for (std::size_t v = 0; v < np; ++v) strat[graph.predicates[v]] = predicate_stratum[v];
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        auto it = strat.find(atoms.at(static_cast<int>(a)).signature());
        if (it != strat.end()) atom_stratum_[a] = it->second;
    }
    watchers_.assign(atoms.size(), {});
    stratum_rules_.assign(static_cast<std::size_t>(num_strata), {});
    for (std::size_t r = 0; r < rules.size(); ++r) {
        for (int a : rules[r].pos) watchers_[static_cast<std::size_t>(a)].push_back(static_cast<int>(r));
        stratum_rules_[static_cast<std::size_t>(atom_stratum(rules[r].head))].push_back(static_cast<int>(r));
    }
}

namespace detail {

FactIndex index_facts(const AtomSet& facts) {
    FactIndex ix;
    for (const auto& a : facts) ix[pred_key(a)].push_back(&a);
    return ix;
}

namespace {

bool unify(const Atom& pattern, const Atom& fact, Binding& b, std::size_t& pushed) {
    pushed = 0;
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        const Term& t = pattern.args[i];
        const std::string& c = fact.args[i].name();
        if (t.is_constant()) {
            if (t.name() != c) return false;
            continue;
        }
        auto it = std::find_if(b.begin(), b.end(), [&](const auto& p) { return p.first == t.name(); });
        if (it != b.end()) {
            if (it->second != c) return false;
        } else {
            b.emplace_back(t.name(), c);
            ++pushed;
        }
    }
    return true;
}

void join_from(const std::vector<Atom>& body, std::size_t i, const FactIndex& facts, Binding& b,
               const std::function<void(const Binding&)>& emit) {
    if (i == body.size()) {
        emit(b);
        return;
    }
    auto it = facts.find(pred_key(body[i]));
    if (it == facts.end()) return;
    for (const Atom* f : it->second) {
        std::size_t pushed = 0;
        bool ok = unify(body[i], *f, b, pushed);
        if (ok) join_from(body, i + 1, facts, b, emit);
        b.resize(b.size() - pushed);
    }
}

} // namespace

void join(const std::vector<Atom>& body, const FactIndex& facts, const std::function<void(const Binding&)>& emit) {
    Binding b;
    join_from(body, 0, facts, b, emit);
}

Atom substitute(const Atom& a, const Binding& b) {
    Atom out(a.predicate);
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) {
        if (t.is_constant()) {
            out.args.push_back(t);
            continue;
        }
        auto it = std::find_if(b.begin(), b.end(), [&](const auto& p) { return p.first == t.name(); });
        if (it == b.end()) throw InvariantViolation("unbound variable " + t.name() + " during grounding");
        out.args.push_back(Term::constant(it->second));
    }
    return out;
}

} // namespace detail

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const auto& t : a.args)
        if (t.is_variable() && std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
}

} // namespace

GroundProgram ground(const std::vector<Rule>& rules, const ConstantSet& extra_constants) {
    for (const auto& r : rules)
        if (!is_safe(r)) throw ValidationError("cannot ground unsafe rule");
    ConstantSet dom = extra_constants;
    for (const auto& r : rules) dom.merge(constants_of(r));
    std::vector<std::string> domain;
    for (const auto& c : dom) domain.push_back(c.name());

    GroundProgram gp;
    std::set<GroundRule> seen;
    for (const auto& r : rules) {
        std::vector<std::string> vars;
        collect_vars(r.head, vars);
        for (const auto& a : r.body_pos) collect_vars(a, vars);
        for (const auto& a : r.body_neg) collect_vars(a, vars);
        if (!vars.empty() && domain.empty()) continue;
        std::vector<std::size_t> choice(vars.size(), 0);
        for (;;) {
            detail::Binding b;
            for (std::size_t i = 0; i < vars.size(); ++i) b.emplace_back(vars[i], domain[choice[i]]);
            GroundRule g;
            g.head = gp.atoms.intern(detail::substitute(r.head, b));
            for (const auto& a : r.body_pos) g.pos.push_back(gp.atoms.intern(detail::substitute(a, b)));
            for (const auto& a : r.body_neg) g.neg.push_back(gp.atoms.intern(detail::substitute(a, b)));
            g.pos = sorted_unique(std::move(g.pos));
            g.neg = sorted_unique(std::move(g.neg));
            if (seen.insert(g).second) gp.rules.push_back(std::move(g));
            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] == domain.size()) choice[k++] = 0;
            if (k == choice.size()) break;
        }
    }
    gp.finalize(rules);
    return gp;
}

GroundProgram ground_relevant(const std::vector<Rule>& rules, const AtomSet& possible_facts) {
    for (const auto& r : rules)
        if (!is_safe(r)) throw ValidationError("cannot ground unsafe rule");
    AtomSet possible = possible_facts;
    for (bool changed = true; changed;) {
        changed = false;
        auto ix = detail::index_facts(possible);
        AtomSet fresh;
        for (const auto& r : rules) {
            detail::join(r.body_pos, ix, [&](const detail::Binding& b) {
                Atom h = detail::substitute(r.head, b);
                if (!possible.contains(h)) fresh.insert(std::move(h));
            });
        }
        if (!fresh.empty()) {
            possible.merge(fresh);
            changed = true;
        }
    }

    GroundProgram gp;
    for (const auto& a : possible) gp.atoms.intern(a);
    auto ix = detail::index_facts(possible);
    std::set<GroundRule> seen;
    for (const auto& r : rules) {
        detail::join(r.body_pos, ix, [&](const detail::Binding& b) {
            GroundRule g;
            g.head = *gp.atoms.find(detail::substitute(r.head, b));
            for (const auto& a : r.body_pos) g.pos.push_back(*gp.atoms.find(detail::substitute(a, b)));
            for (const auto& a : r.body_neg)
                if (auto id = gp.atoms.find(detail::substitute(a, b))) g.neg.push_back(*id);
            g.pos = sorted_unique(std::move(g.pos));
            g.neg = sorted_unique(std::move(g.neg));
            if (seen.insert(g).second) gp.rules.push_back(std::move(g));
        });
    }
    gp.finalize(rules);
    return gp;
}

ProgramClass classify(const GroundProgram& gp) { return gp.flags; }

ProgramClass classify(const std::vector<Rule>& rules) {
    GroundProgram gp;
    gp.finalize(rules);
    return gp.flags;
}

} // namespace abdux
