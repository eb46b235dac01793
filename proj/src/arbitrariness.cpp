//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/arbitrariness.hpp"

#include "abdux/error.hpp"
#include "abdux/kernels.hpp"
#include "abdux/parser.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

namespace abdux {

std::set<Occurrence> occurrences(const AtomSet& e, const Constant& c) {
    std::set<Occurrence> out;
    for (const auto& a : e)
        for (std::size_t k = 0; k < a.args.size(); ++k)
            if (a.args[k].is_constant() && a.args[k].name() == c.name()) out.insert({a, k + 1});
    return out;
}

std::vector<Occurrence> all_occurrences(const AtomSet& e) {
    std::vector<Occurrence> out;
    for (const auto& a : e)
        for (std::size_t k = 0; k < a.args.size(); ++k) out.push_back({a, k + 1});
    return out;
}

AtomSet apply_replacement(const ReplacementFunction& f, const AtomSet& e, const Constant& x) {
    std::map<Atom, std::vector<std::size_t>> by_atom;
    for (const auto& occ : f.occurrences) {
        if (!e.contains(occ.atom))
            throw ValidationError("stale occurrence: atom " + to_string(occ.atom) + " is not in the set");
        if (occ.position < 1 || occ.position > occ.atom.arity() || occ.constant() != f.target)
            throw ValidationError("occurrence " + to_string(occ.atom) + "^" + std::to_string(occ.position) +
                                  " does not refer to " + f.target.name());
        by_atom[occ.atom].push_back(occ.position);
    }
    AtomSet out;
    for (const auto& a : e) {
        auto it = by_atom.find(a);
        if (it == by_atom.end()) {
            out.insert(a);
            continue;
        }
        Atom b = a;
        for (std::size_t k : it->second) b.args[k - 1] = Term::constant(x);
        out.insert(std::move(b));
    }
    return out;
}

bool independent(const ReplacementFunction& f1, const ReplacementFunction& f2) {
    if (f1.target != f2.target) return true;
    for (const auto& o : f1.occurrences)
        if (f2.occurrences.contains(o)) return false;
    return true;
}

Constant replacement_constant(const AbductiveTheory& t, const Observation& o, const AtomSet& e) {
    ConstantSet avoid = constants_of(t);
    avoid.merge(constants_of(o));
    avoid.merge(constants_of(e));
    return fresh_constant(avoid);
}

namespace {

struct Candidate {
    Constant target;
    std::vector<Occurrence> occs;
    std::uint32_t mask = 0;
    AtomSet image;
};

struct Prepared {
    std::vector<Candidate> candidates;
    std::unique_ptr<Workspace> ws;
    std::vector<int> del;
};

Prepared prepare(const AbductiveTheory& t, const Observation& o, const Explanation& d, AgreementType type,
                 const ArbitrarinessOptions& opts) {
    validate_explanation(t, d);
    if (!d.disjoint()) throw PreconditionError("not an explanation: add and delete parts overlap");
    for (const auto& a : d.del)
        if (!t.abducible_facts().contains(a))
            throw PreconditionError("not an explanation: deleted atom " + to_string(a) + " is not a program fact");

    std::size_t total = all_occurrences(d.add).size();
    if (total > opts.cap_occurrences)
        throw CapExceeded("explanation has " + std::to_string(total) + " occurrences; cap is " +
                          std::to_string(opts.cap_occurrences));

    Constant xi = opts.xi ? *opts.xi : replacement_constant(t, o, d.add);
    if (opts.xi) {
        ConstantSet used = constants_of(t);
        used.merge(constants_of(o));
        used.merge(constants_of(d.add));
        if (used.contains(xi)) throw ValidationError("replacement constant " + xi.name() + " is not fresh");
    }

    Prepared p;
    AtomSet possible = d.add;
    for (const auto& c : constants_of(d.add)) {
        auto occ = occurrences(d.add, c);
        std::vector<Occurrence> occs(occ.begin(), occ.end());
        if (occs.size() > 31)
            throw CapExceeded("constant " + c.name() + " has more than 31 occurrences");
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << occs.size()); ++mask) {
            ReplacementFunction f{c, {}};
            for (std::size_t i = 0; i < occs.size(); ++i)
                if (mask >> i & 1U) f.occurrences.insert(occs[i]);
            Candidate cand{c, occs, mask, apply_replacement(f, d.add, xi)};
            possible.insert(cand.image.begin(), cand.image.end());
            p.candidates.push_back(std::move(cand));
        }
    }
    p.ws = std::make_unique<Workspace>(t, o, possible, opts.semantics);
    p.del = p.ws->ids_of(d.del);
    if (!p.ws->explains(p.ws->ids_of(d.add), p.del, type))
        throw PreconditionError("not an explanation: the observation does not agree with the revised program");
    return p;
}

ReplacementFunction to_function(const Candidate& c) {
    ReplacementFunction f{c.target, {}};
    for (std::size_t i = 0; i < c.occs.size(); ++i)
        if (c.mask >> i & 1U) f.occurrences.insert(c.occs[i]);
    return f;
}

} // namespace

std::vector<ReplacementFunction> valid_replacements(const AbductiveTheory& t, const Observation& o,
                                                    const Explanation& d, AgreementType type,
                                                    const ArbitrarinessOptions& opts) {
    Prepared p = prepare(t, o, d, type, opts);
    std::vector<std::vector<int>> adds;
    adds.reserve(p.candidates.size());
    for (const auto& c : p.candidates) adds.push_back(p.ws->ids_of(c.image));
    auto ok = kernels::check_all(
        p.candidates.size(), [&](std::size_t i) { return p.ws->explains(adds[i], p.del, type); },
        opts.semantics.exec);
    std::vector<ReplacementFunction> out;
    for (std::size_t i = 0; i < p.candidates.size(); ++i)
        if (ok[i]) out.push_back(to_function(p.candidates[i]));
    return out;
}

std::size_t max_disjoint_packing(const std::vector<std::uint32_t>& family) {
    std::uint32_t universe = 0;
    for (auto s : family) universe |= s;
    std::unordered_map<std::uint32_t, std::size_t> memo;
    std::function<std::size_t(std::uint32_t)> best = [&](std::uint32_t avail) -> std::size_t {
        if (avail == 0) return 0;
        if (auto it = memo.find(avail); it != memo.end()) return it->second;
        std::uint32_t low = avail & (~avail + 1);
        std::size_t r = best(avail & ~low);
        for (auto s : family)
            if ((s & low) && (s & ~avail) == 0) r = std::max(r, 1 + best(avail & ~s));
        memo.emplace(avail, r);
        return r;
    };
    return best(universe);
}

std::size_t degree_of(const std::vector<ReplacementFunction>& valid) {
    std::map<Constant, std::vector<std::set<Occurrence>>> by_constant;
    for (const auto& f : valid) by_constant[f.target].push_back(f.occurrences);
    std::size_t total = 0;
    for (const auto& [c, sets] : by_constant) {
        std::map<Occurrence, unsigned> index;
        for (const auto& s : sets)
            for (const auto& o : s) index.emplace(o, 0U);
        unsigned next = 0;
        for (auto& [o, i] : index) i = next++;
        std::vector<std::uint32_t> family;
        for (const auto& s : sets) {
            std::uint32_t m = 0;
            for (const auto& o : s) m |= std::uint32_t{1} << index[o];
            family.push_back(m);
        }
        total += max_disjoint_packing(family);
    }
    return total;
}

std::size_t degree(const AbductiveTheory& t, const Observation& o, const Explanation& d, AgreementType type,
                   const ArbitrarinessOptions& opts) {
    return degree_of(valid_replacements(t, o, d, type, opts));
}

bool is_constrained(const AbductiveTheory& t, const Observation& o, const Explanation& d, AgreementType type,
                    const ArbitrarinessOptions& opts) {
    Prepared p = prepare(t, o, d, type, opts);
    std::size_t hit = kernels::find_first(
        p.candidates.size(),
        [&](std::size_t i) { return p.ws->explains(p.ws->ids_of(p.candidates[i].image), p.del, type); },
        opts.semantics.exec);
    bool constrained = hit == p.candidates.size();
    if (constrained) {
        ConstantSet known = constants_of(t);
        known.merge(constants_of(o));
        for (const auto& c : constants_of(d))
            if (!known.contains(c))
                throw InvariantViolation("constrained explanation uses constant " + c.name() +
                                         " that occurs in neither the theory nor the observation");
    }
    return constrained;
}

} // namespace abdux
