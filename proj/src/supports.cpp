//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "supports.hpp"

#include "abdux/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace abdux::detail {

namespace {

using Env = std::vector<int>;
using Label = std::vector<Env>;

constexpr std::size_t label_cap = 200'000;

bool subsumes(const Env& small, const Env& big) {
    return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Adds `e` unless subsumed; drops members it subsumes. True if added.
bool add_env(Label& l, Env e) {
    for (const auto& x : l)
        if (subsumes(x, e)) return false;
    std::erase_if(l, [&](const Env& x) { return subsumes(e, x); });
    l.push_back(std::move(e));
    if (l.size() > label_cap) throw CapExceeded("support label grew beyond " + std::to_string(label_cap));
    return true;
}

Label product(const std::vector<const Label*>& parts, std::size_t max_size) {
    Label acc{Env{}};
    for (const Label* p : parts) {
        Label next;
        for (const auto& a : acc)
            for (const auto& b : *p) {
                Env u;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
                if (u.size() <= max_size) add_env(next, std::move(u));
            }
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

bool by_size_then_lex(const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<AtomSet> minimize(std::set<AtomSet> found) {
    std::vector<AtomSet> all(found.begin(), found.end());
    std::sort(all.begin(), all.end(), by_size_then_lex);
    std::vector<AtomSet> out;
    for (const auto& s : all) {
        bool covered = std::any_of(out.begin(), out.end(), [&](const AtomSet& m) {
            return std::includes(s.begin(), s.end(), m.begin(), m.end());
        });
        if (!covered) out.push_back(s);
    }
    return out;
}

} // namespace

std::vector<AtomSet> minimal_supports(const Workspace& ws, const AtomSet& universe, const std::vector<int>& del,
                                      const Observation& o, std::size_t max_add) {
    const GroundProgram& gp = ws.program();
    std::vector<Label> label(gp.atoms.size());
    std::deque<int> dirty;
    auto update = [&](int atom, const Label& add) {
        bool changed = false;
        for (const auto& e : add) changed = add_env(label[static_cast<std::size_t>(atom)], e) || changed;
        if (changed)
            for (int r : gp.watchers(atom)) dirty.push_back(r);
    };
    for (int b : ws.base_facts())
        if (std::find(del.begin(), del.end(), b) == del.end()) update(b, {Env{}});
    if (max_add > 0)
        for (const auto& a : universe)
            if (auto id = ws.id(a)) update(*id, {Env{*id}});
    for (std::size_t r = 0; r < gp.rules.size(); ++r) dirty.push_back(static_cast<int>(r));

    while (!dirty.empty()) {
        const GroundRule& r = gp.rules[static_cast<std::size_t>(dirty.front())];
        dirty.pop_front();
        if (!r.neg.empty()) throw PreconditionError("support computation needs a Horn program");
        std::vector<const Label*> parts;
        for (int a : r.pos) parts.push_back(&label[static_cast<std::size_t>(a)]);
        update(r.head, product(parts, max_add));
    }

    std::vector<const Label*> goal;
    for (const auto& a : o.atoms) {
        auto id = ws.id(a);
        if (!id) return {};
        goal.push_back(&label[static_cast<std::size_t>(*id)]);
    }
    std::set<AtomSet> found;
    for (const auto& env : product(goal, max_add)) {
        AtomSet s;
        for (int id : env) s.insert(gp.atoms.at(id));
        found.insert(std::move(s));
    }
    return minimize(std::move(found));
}

namespace {

class Prover {
public:
    Prover(const AbductiveTheory& t, std::size_t k) : t_(t), k_(k) {
        for (const auto& r : t.remainder()) {
            if (r.is_fact())
                facts_[r.head.signature()].push_back(r.head);
            else
                rules_[r.head.signature()].push_back(&r);
        }
        for (const auto& a : t.abducible_facts()) facts_[a.signature()].push_back(a);
    }

    std::set<AtomSet> run(const Observation& o) {
        std::vector<Atom> goals(o.atoms.rbegin(), o.atoms.rend());
        solve(goals);
        return std::move(found_);
    }

private:
    Term deref(Term x) const {
        while (x.is_variable()) {
            auto it = subst_.find(x.name());
            if (it == subst_.end()) break;
            x = it->second;
        }
        return x;
    }

    bool unify(const Atom& a, const Atom& b) {
        if (a.signature() != b.signature()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            Term x = deref(a.args[i]), y = deref(b.args[i]);
            if (x == y) continue;
            if (x.is_variable()) {
                bind(x.name(), y);
            } else if (y.is_variable()) {
                bind(y.name(), x);
            } else {
                return false;
            }
        }
        return true;
    }

    void bind(const std::string& v, const Term& t) {
        subst_.emplace(v, t);
        trail_.push_back(v);
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            subst_.erase(trail_.back());
            trail_.pop_back();
        }
    }

    Atom rename(const Atom& a, std::size_t n) const {
        Atom b = a;
        for (auto& x : b.args)
            if (x.is_variable()) x = Term::variable(x.name() + "#" + std::to_string(n));
        return b;
    }

    void solve(std::vector<Atom>& goals) {
        if (goals.empty()) {
            finish();
            return;
        }
        Atom g = goals.back();
        goals.pop_back();
        std::size_t mark = trail_.size();
        if (auto it = facts_.find(g.signature()); it != facts_.end())
            for (const auto& f : it->second) {
                if (unify(g, f)) solve(goals);
                undo(mark);
            }
        if (t_.is_abducible(g)) {
            if (assumed_.size() < k_) {
                assumed_.push_back(g);
                solve(goals);
                assumed_.pop_back();
            }
        } else if (auto it = rules_.find(g.signature()); it != rules_.end()) {
            for (const Rule* r : it->second) {
                std::size_t n = next_id_++;
                if (unify(g, rename(r->head, n))) {
                    std::size_t size = goals.size();
                    for (auto b = r->body_pos.rbegin(); b != r->body_pos.rend(); ++b) goals.push_back(rename(*b, n));
                    solve(goals);
                    goals.resize(size);
                }
                undo(mark);
            }
        }
        goals.push_back(std::move(g));
    }

    void finish() {
        std::vector<Atom> leaves;
        std::vector<std::string> open;
        std::set<std::string> anchors;
        for (const auto& a : assumed_) {
            Atom b = a;
            for (auto& x : b.args) {
                x = deref(x);
                if (x.is_constant())
                    anchors.insert(x.name());
                else if (std::find(open.begin(), open.end(), x.name()) == open.end())
                    open.push_back(x.name());
            }
            leaves.push_back(std::move(b));
        }
        if (!open.empty() && anchors.empty()) return;
        std::vector<std::string> dom(anchors.begin(), anchors.end());
        std::vector<std::size_t> pick(open.size(), 0);
        for (;;) {
            AtomSet s;
            for (const auto& a : leaves) {
                Atom b = a;
                for (auto& x : b.args)
                    if (x.is_variable()) {
                        auto pos = std::find(open.begin(), open.end(), x.name()) - open.begin();
                        x = Term::constant(dom[pick[static_cast<std::size_t>(pos)]]);
                    }
                if (!t_.abducible_facts().contains(b)) s.insert(std::move(b));
            }
            found_.insert(std::move(s));
            std::size_t i = open.size();
            while (i > 0 && ++pick[i - 1] == dom.size()) pick[--i] = 0;
            if (i == 0) break;
        }
    }

    const AbductiveTheory& t_;
    std::size_t k_;
    std::map<PredicateSig, std::vector<Atom>> facts_;
    std::map<PredicateSig, std::vector<const Rule*>> rules_;
    std::map<std::string, Term> subst_;
    std::vector<std::string> trail_;
    std::vector<Atom> assumed_;
    std::size_t next_id_ = 0;
    std::set<AtomSet> found_;
};

} // namespace

std::vector<AtomSet> proof_supports(const AbductiveTheory& t, const Observation& o, std::size_t k) {
    Prover p(t, k);
    return minimize(p.run(o));
}

} // namespace abdux::detail
