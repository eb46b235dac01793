//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/search.hpp"

#include "abdux/error.hpp"
#include "abdux/kernels.hpp"
#include "abdux/parser.hpp"
#include "supports.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

namespace abdux {

ConstantSet candidate_domain(const AbductiveTheory& t, const Observation& o, std::size_t with_fresh) {
    ConstantSet d = constants_of(t);
    d.merge(constants_of(o));
    ConstantSet avoid = d;
    for (std::size_t i = 0; i < with_fresh; ++i) {
        Constant c = fresh_constant(avoid);
        avoid.insert(c);
        d.insert(c);
    }
    return d;
}

AtomSet abducible_atoms(const AbductiveTheory& t, const ConstantSet& domain) {
    std::vector<Constant> dom(domain.begin(), domain.end());
    AtomSet out;
    for (const auto& sig : t.abducibles()) {
        if (sig.arity > 0 && dom.empty()) continue;
        std::vector<std::size_t> choice(sig.arity, 0);
        for (;;) {
            Atom a(sig.name);
            for (std::size_t i = 0; i < sig.arity; ++i) a.args.push_back(Term::constant(dom[choice[i]]));
            out.insert(std::move(a));
            std::size_t k = sig.arity;
            while (k > 0 && ++choice[k - 1] == dom.size()) choice[--k] = 0;
            if (k == 0) break;
        }
    }
    return out;
}

namespace {

long double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return r;
}

} // namespace

std::uint64_t candidate_count(std::size_t add_atoms, std::size_t base_facts, const SearchBounds& b) {
    long double adds = 0, dels = 0;
    for (std::size_t e = 0; e <= b.max_add; ++e) adds += binom(add_atoms, e);
    for (std::size_t f = 0; f <= b.max_del; ++f) dels += binom(base_facts, f);
    long double total = adds * dels;
    if (total > 1.8e19L) return UINT64_MAX;
    return static_cast<std::uint64_t>(std::llround(total));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Candidates (E, F) as index lists into the sorted add universe and B, in
/// stream order.
class CandidateSpace {
public:
    using Visit = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

    CandidateSpace(const std::vector<Atom>& universe, const std::vector<Atom>& base, SearchBounds bounds)
        : universe_(universe), base_(base), bounds_(bounds) {
        in_base_.assign(universe.size(), -1);
        for (std::size_t i = 0; i < universe.size(); ++i) {
            auto it = std::lower_bound(base.begin(), base.end(), universe[i]);
            if (it != base.end() && *it == universe[i]) in_base_[i] = static_cast<int>(it - base.begin());
        }
    }

    /// Returns false if `visit` asked to stop.
    bool run(const Visit& visit) {
        for (std::size_t s = 0; s <= bounds_.max_add + bounds_.max_del; ++s) {
            size_ = s;
            add_.clear();
            if (!node(0, visit)) return false;
        }
        return true;
    }

private:
    bool node(std::size_t start, const Visit& visit) {
        std::size_t e = add_.size();
        std::size_t f = size_ - e;
        if (f <= bounds_.max_del && !deletions(f, visit)) return false;
        if (e >= std::min(size_, bounds_.max_add)) return true;
        std::size_t need = size_ > bounds_.max_del ? size_ - bounds_.max_del : 0;
        for (std::size_t i = start; i < universe_.size(); ++i) {
            if (e + 1 + (universe_.size() - 1 - i) < need) break;
            add_.push_back(static_cast<int>(i));
            bool go = node(i + 1, visit);
            add_.pop_back();
            if (!go) return false;
        }
        return true;
    }

    bool deletions(std::size_t f, const Visit& visit) {
        std::vector<int> avail;
        for (std::size_t j = 0; j < base_.size(); ++j) {
            bool taken = std::any_of(add_.begin(), add_.end(), [&](int i) { return in_base_[static_cast<std::size_t>(i)] == static_cast<int>(j); });
            if (!taken) avail.push_back(static_cast<int>(j));
        }
        if (f > avail.size()) return true;
        std::vector<std::size_t> pick(f);
        for (std::size_t i = 0; i < f; ++i) pick[i] = i;
        std::vector<int> del(f);
        for (;;) {
            for (std::size_t i = 0; i < f; ++i) del[i] = avail[pick[i]];
            if (!visit(add_, del)) return false;
            std::size_t i = f;
            while (i > 0 && pick[i - 1] == avail.size() - f + i - 1) --i;
            if (i == 0) return true;
            ++pick[i - 1];
            for (std::size_t j = i; j < f; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    const std::vector<Atom>& universe_;
    const std::vector<Atom>& base_;
    SearchBounds bounds_;
    std::vector<int> in_base_;
    std::vector<int> add_;
    std::size_t size_ = 0;
};

/// Checks candidates of a space in batches and emits explanations in order.
SearchStats run_space(const Workspace& ws, const std::vector<Atom>& universe, const std::vector<Atom>& base,
                      const SearchBounds& bounds, AgreementType type, const ExplanationSink& sink) {
    SearchStats stats;
    std::vector<int> uid, bid;
    for (const auto& a : universe) uid.push_back(*ws.id(a));
    for (const auto& a : base) bid.push_back(*ws.id(a));

    struct Item {
        std::vector<int> add, del;
    };
    std::vector<Item> batch;
    constexpr std::size_t batch_size = 4096;
    bool stopped = false;

    auto flush = [&]() {
        auto ok = kernels::check_all(
            batch.size(),
            [&](std::size_t i) {
                std::vector<int> add, del;
                add.reserve(batch[i].add.size());
                for (int u : batch[i].add) add.push_back(uid[static_cast<std::size_t>(u)]);
                for (int b : batch[i].del) del.push_back(bid[static_cast<std::size_t>(b)]);
                return ws.explains(add, del, type);
            },
            ws.options().exec);
        stats.candidates_checked += batch.size();
        for (std::size_t i = 0; i < batch.size() && !stopped; ++i) {
            if (!ok[i]) continue;
            ++stats.explanations_found;
            Explanation e;
            for (int u : batch[i].add) e.add.insert(universe[static_cast<std::size_t>(u)]);
            for (int b : batch[i].del) e.del.insert(base[static_cast<std::size_t>(b)]);
            if (!sink(e)) stopped = true;
        }
        batch.clear();
    };

    CandidateSpace space(universe, base, bounds);
    space.run([&](const std::vector<int>& add, const std::vector<int>& del) {
        batch.push_back({add, del});
        if (batch.size() == batch_size) flush();
        return !stopped;
    });
    if (!stopped && !batch.empty()) flush();
    stats.exhausted = !stopped;
    return stats;
}

void check_cap(std::size_t universe, std::size_t base, const SearchBounds& b, std::uint64_t cap) {
    std::uint64_t n = candidate_count(universe, base, b);
    if (n > cap)
        throw CapExceeded("candidate space of " + std::to_string(n) + " explanations exceeds the cap of " +
                          std::to_string(cap));
}

} // namespace

SearchStats enumerate_explanations(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                   const SearchOptions& opts, const ExplanationSink& sink) {
    auto t0 = Clock::now();
    AtomSet u = abducible_atoms(t, candidate_domain(t, o, opts.bounds.with_fresh));
    std::vector<Atom> universe(u.begin(), u.end());
    std::vector<Atom> base(t.abducible_facts().begin(), t.abducible_facts().end());
    check_cap(universe.size(), base.size(), opts.bounds, opts.cap_candidates);
    Workspace ws(t, o, u, opts.semantics());
    SearchStats stats = run_space(ws, universe, base, opts.bounds, type, sink);
    stats.time_ms = elapsed_ms(t0);
    return stats;
}

std::vector<Explanation> enumerate_explanations(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                                const SearchOptions& opts) {
    std::vector<Explanation> out;
    enumerate_explanations(t, o, type, opts, [&](const Explanation& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

SearchStats enumerate_constrained(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                  const SearchOptions& opts, const ExplanationSink& sink) {
    return enumerate_explanations(t, o, type, opts, [&](const Explanation& e) {
        return is_constrained(t, o, e, type, opts.arbitrariness) ? sink(e) : true;
    });
}

namespace {

/// Atoms of positive arity that no ground rule or constraint over the
/// domain plus `xi` mentions, and whose copy with the first argument
/// replaced by `xi` is unmentioned as well. No constrained explanation
/// adds such an atom.
AtomSet inert_atoms(const AbductiveTheory& t, const Observation& o, const ConstantSet& domain, const Constant& xi,
                    const SemanticsOptions& sem) {
    ConstantSet wide = domain;
    wide.insert(xi);
    AtomSet all = abducible_atoms(t, wide);
    Workspace ws(t, o, all, sem);
    const GroundProgram& gp = ws.program();
    std::vector<char> mentioned(gp.atoms.size(), 0);
    for (const auto& r : gp.rules) {
        for (int a : r.pos) mentioned[static_cast<std::size_t>(a)] = 1;
        for (int a : r.neg) mentioned[static_cast<std::size_t>(a)] = 1;
    }
    AtomSet ix_all;
    for (std::size_t i = 0; i < gp.atoms.size(); ++i) ix_all.insert(gp.atoms.at(static_cast<int>(i)));
    auto ix = detail::index_facts(ix_all);
    for (const auto& ic : t.constraints()) {
        detail::join(ic.body_pos, ix, [&](const detail::Binding& b) {
            auto mark = [&](const Atom& a) {
                if (auto id = gp.atoms.find(detail::substitute(a, b))) mentioned[static_cast<std::size_t>(*id)] = 1;
            };
            for (const auto& a : ic.body_pos) mark(a);
            for (const auto& a : ic.body_neg) mark(a);
            for (const auto& a : ic.head) mark(a);
        });
    }
    auto inert = [&](const Atom& a) {
        auto id = gp.atoms.find(a);
        return id && !mentioned[static_cast<std::size_t>(*id)];
    };
    AtomSet out;
    for (const auto& a : abducible_atoms(t, domain)) {
        if (a.arity() == 0 || !inert(a)) continue;
        Atom b = a;
        b.args[0] = Term::constant(xi);
        if (inert(b)) out.insert(a);
    }
    return out;
}

SearchResult constrained_by_enumeration(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                        const SearchOptions& opts, const ConstantSet& domain) {
    auto t0 = Clock::now();
    SearchResult res;
    res.bounds = opts.bounds;
    res.route = "enumeration";
    // Without fresh constants in the domain, xi is always the lowest fresh constant.
    Constant xi = opts.arbitrariness.xi ? *opts.arbitrariness.xi : fresh_constant(domain);
    AtomSet skip = inert_atoms(t, o, domain, xi, opts.semantics());
    std::vector<Atom> universe;
    for (const auto& a : abducible_atoms(t, domain))
        if (!t.abducible_facts().contains(a) && !skip.contains(a)) universe.push_back(a);
    std::vector<Atom> base(t.abducible_facts().begin(), t.abducible_facts().end());
    check_cap(universe.size(), base.size(), opts.bounds, opts.cap_candidates);
    Workspace ws(t, o, AtomSet(universe.begin(), universe.end()), opts.semantics());
    res.stats = run_space(ws, universe, base, opts.bounds, type, [&](const Explanation& e) {
        if (!is_constrained(t, o, e, type, opts.arbitrariness)) return true;
        res.explanation = e;
        return false;
    });
    res.stats.time_ms = elapsed_ms(t0);
    return res;
}

SearchResult constrained_by_supports(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                     const SearchOptions& opts, const ConstantSet& domain) {
    auto t0 = Clock::now();
    SearchResult res;
    res.bounds = opts.bounds;
    res.route = "horn-supports";
    AtomSet universe;
    for (const auto& a : abducible_atoms(t, domain))
        if (!t.abducible_facts().contains(a)) universe.insert(a);
    std::vector<Atom> base(t.abducible_facts().begin(), t.abducible_facts().end());
    Workspace ws(t, o, universe, opts.semantics());

    std::vector<Explanation> candidates;
    std::vector<Atom> none;
    SearchBounds del_only{0, opts.bounds.max_del, 0};
    CandidateSpace dels(none, base, del_only);
    dels.run([&](const std::vector<int>&, const std::vector<int>& del) {
        std::vector<int> del_ids;
        AtomSet del_atoms;
        for (int b : del) {
            del_atoms.insert(base[static_cast<std::size_t>(b)]);
            del_ids.push_back(*ws.id(base[static_cast<std::size_t>(b)]));
        }
        for (const auto& s : detail::minimal_supports(ws, universe, del_ids, o, opts.bounds.max_add))
            candidates.push_back({s, del_atoms});
        return true;
    });
    std::sort(candidates.begin(), candidates.end(), explanation_order);
    res.stats.explanations_found = candidates.size();
    for (const auto& c : candidates) {
        ++res.stats.candidates_checked;
        if (is_constrained(t, o, c, type, opts.arbitrariness)) {
            res.explanation = c;
            break;
        }
    }
    res.stats.exhausted = !res.explanation;
    res.stats.time_ms = elapsed_ms(t0);
    return res;
}

} // namespace

SearchResult find_constrained(const AbductiveTheory& t, const Observation& o, AgreementType type,
                              const SearchOptions& opts) {
    // Constrained explanations only use constants of T and O, so fresh
    // constants never need to be in the candidate domain.
    ConstantSet domain = candidate_domain(t, o, 0);
    ProgramClass cls = classify(t.remainder());
    if (cls.horn && t.constraints().empty() && !opts.enumeration_only) return constrained_by_supports(t, o, type, opts, domain);
    return constrained_by_enumeration(t, o, type, opts, domain);
}

std::vector<Explanation> filter_subset_minimal(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                               const std::vector<Explanation>& ds, const SearchOptions& opts) {
    std::vector<Explanation> out;
    for (const auto& d : ds) {
        std::vector<Atom> parts(d.add.begin(), d.add.end());
        parts.insert(parts.end(), d.del.begin(), d.del.end());
        if (parts.size() > 24) throw CapExceeded("explanation too large for the subset-minimality check");
        Workspace ws(t, o, d.add, opts.semantics());
        auto add_ids = ws.ids_of(d.add);
        auto del_ids = ws.ids_of(d.del);
        std::size_t na = add_ids.size();
        const auto full = (std::uint64_t{1} << parts.size()) - 1;
        auto smaller = kernels::find_first(
            static_cast<std::size_t>(full),
            [&](std::size_t mask) {
                std::vector<int> a, f;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (!(mask >> i & 1U)) continue;
                    (i < na ? a : f).push_back(i < na ? add_ids[i] : del_ids[i - na]);
                }
                return ws.explains(a, f, type);
            },
            opts.semantics().exec);
        if (smaller == full) out.push_back(d);
    }
    return out;
}

std::vector<Explanation> filter_card_minimal(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                             const std::vector<Explanation>& ds, const SearchOptions& opts) {
    if (ds.empty()) return {};
    std::size_t best = ds.front().size();
    for (const auto& d : ds) best = std::min(best, d.size());
    if (best > 0) {
        SearchOptions probe = opts;
        probe.bounds.max_add = best - 1;
        probe.bounds.max_del = std::min(best - 1, t.abducible_facts().size());
        // Enough fresh constants to represent any smaller explanation up to renaming.
        probe.bounds.with_fresh = (best - 1) * t.max_abducible_arity();
        bool found = false;
        enumerate_explanations(t, o, type, probe, [&](const Explanation&) {
            found = true;
            return false;
        });
        if (found) return {};
    }
    std::vector<Explanation> out;
    for (const auto& d : ds)
        if (d.size() == best) out.push_back(d);
    return out;
}

std::vector<RankedExplanation> rank_by_arbitrariness(const AbductiveTheory& t, const Observation& o,
                                                     AgreementType type, const std::vector<Explanation>& ds,
                                                     const SearchOptions& opts) {
    std::vector<RankedExplanation> out;
    for (const auto& d : ds) out.push_back({d, degree(t, o, d, type, opts.arbitrariness)});
    std::stable_sort(out.begin(), out.end(), [](const RankedExplanation& a, const RankedExplanation& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return explanation_order(a.explanation, b.explanation);
    });
    return out;
}

std::size_t tractable_bound(const AbductiveTheory& t, const Observation& o) {
    std::map<PredicateSig, std::size_t> memo;
    std::function<std::size_t(const PredicateSig&, std::size_t)> leaves = [&](const PredicateSig& p,
                                                                             std::size_t depth) -> std::size_t {
        if (t.is_abducible(p)) return 1;
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        if (depth > t.remainder().size() + 1) throw PreconditionError("program is recursive");
        std::size_t best = 0;
        for (const auto& r : t.remainder()) {
            if (r.head.signature() != p) continue;
            std::size_t sum = 0;
            for (const auto& b : r.body_pos) sum += leaves(b.signature(), depth + 1);
            best = std::max(best, sum);
        }
        memo[p] = best;
        return best;
    };
    std::size_t k = 0;
    for (const auto& a : o.atoms) k += leaves(a.signature(), 0);
    return k;
}

SearchResult find_constrained_tractable(const AbductiveTheory& t, const Observation& o,
                                        const ArbitrarinessOptions& opts) {
    ProgramClass cls = classify(t.remainder());
    if (!cls.non_recursive || !cls.horn)
        throw PreconditionError("tractable search needs a non-recursive Horn program");
    if (!t.constraints().empty()) throw PreconditionError("tractable search needs a theory without integrity constraints");
    auto t0 = Clock::now();
    SearchResult res;
    res.route = "tractable";
    std::size_t k = tractable_bound(t, o);
    res.bounds = {k, 0, 0};
    auto candidates = detail::proof_supports(t, o, k);
    res.stats.explanations_found = candidates.size();
    for (const auto& s : candidates) {
        ++res.stats.candidates_checked;
        Explanation e{s, {}};
        if (is_constrained(t, o, e, AgreementType::D, opts)) {
            res.explanation = e;
            break;
        }
    }
    res.stats.exhausted = !res.explanation;
    res.stats.time_ms = elapsed_ms(t0);
    return res;
}

} // namespace abdux
