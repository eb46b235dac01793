//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/core.hpp"

#include "abdux/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace abdux {

bool Atom::is_ground() const noexcept {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_constant(); });
}

Atom ground_atom(std::string predicate, std::initializer_list<std::string> args) {
    Atom a(std::move(predicate));
    for (const auto& s : args) a.args.push_back(Term::constant(s));
    return a;
}

std::size_t AtomHash::operator()(const Atom& a) const noexcept {
    std::size_t h = std::hash<std::string>{}(a.predicate);
    for (const auto& t : a.args) {
        std::size_t th = std::hash<std::string>{}(t.name()) ^ (t.is_variable() ? 0x9e3779b97f4a7c15ULL : 0);
        h ^= th + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void collect_vars(const Atom& a, std::set<std::string>& out) {
    for (const auto& t : a.args)
        if (t.is_variable()) out.insert(t.name());
}

bool covered(const std::vector<Atom>& atoms, const std::set<std::string>& bound) {
    std::set<std::string> vs;
    for (const auto& a : atoms) collect_vars(a, vs);
    return std::includes(bound.begin(), bound.end(), vs.begin(), vs.end());
}

} // namespace

bool is_safe(const Rule& r) {
    std::set<std::string> bound;
    for (const auto& a : r.body_pos) collect_vars(a, bound);
    return covered({r.head}, bound) && covered(r.body_neg, bound);
}

bool is_safe(const IntegrityConstraint& ic) {
    std::set<std::string> bound;
    for (const auto& a : ic.body_pos) collect_vars(a, bound);
    return covered(ic.head, bound) && covered(ic.body_neg, bound);
}

AbductiveTheory::AbductiveTheory(std::vector<Rule> program, std::set<PredicateSig> abducibles,
                                 std::vector<IntegrityConstraint> constraints)
    : program_(std::move(program)), abducibles_(std::move(abducibles)), constraints_(std::move(constraints)) {
    for (const auto& r : program_) {
        if (!is_safe(r)) throw ValidationError("unsafe rule: " + [&] { std::ostringstream s; s << r; return s.str(); }());
        if (is_abducible(r.head)) {
            if (!r.is_fact())
                throw ValidationError("rule with abducible head must be a ground fact: " + to_string(r.head));
            facts_b_.insert(r.head);
        } else {
            rules_r_.push_back(r);
        }
    }
    for (const auto& ic : constraints_) {
        if (!is_safe(ic)) {
            std::ostringstream s;
            s << ic;
            throw ValidationError("unsafe integrity constraint: " + s.str());
        }
    }
}

std::size_t AbductiveTheory::max_abducible_arity() const noexcept {
    std::size_t m = 0;
    for (const auto& s : abducibles_) m = std::max(m, s.arity);
    return m;
}

bool Explanation::disjoint() const {
    for (const auto& a : add)
        if (del.contains(a)) return false;
    return true;
}

bool explanation_order(const Explanation& a, const Explanation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.add != b.add)
        return std::lexicographical_compare(a.add.begin(), a.add.end(), b.add.begin(), b.add.end());
    return std::lexicographical_compare(a.del.begin(), a.del.end(), b.del.begin(), b.del.end());
}

ConstantSet constants_of(const Atom& a) {
    ConstantSet out;
    for (const auto& t : a.args)
        if (t.is_constant()) out.insert(t.as_constant());
    return out;
}

namespace {
void add_constants(const Atom& a, ConstantSet& out) {
    for (const auto& t : a.args)
        if (t.is_constant()) out.insert(t.as_constant());
}
} // namespace

ConstantSet constants_of(const AtomSet& atoms) {
    ConstantSet out;
    for (const auto& a : atoms) add_constants(a, out);
    return out;
}

ConstantSet constants_of(const Rule& r) {
    ConstantSet out;
    add_constants(r.head, out);
    for (const auto& a : r.body_pos) add_constants(a, out);
    for (const auto& a : r.body_neg) add_constants(a, out);
    return out;
}

ConstantSet constants_of(const IntegrityConstraint& ic) {
    ConstantSet out;
    for (const auto& a : ic.head) add_constants(a, out);
    for (const auto& a : ic.body_pos) add_constants(a, out);
    for (const auto& a : ic.body_neg) add_constants(a, out);
    return out;
}

ConstantSet constants_of(const AbductiveTheory& t) {
    ConstantSet out;
    for (const auto& r : t.program()) out.merge(constants_of(r));
    for (const auto& ic : t.constraints()) out.merge(constants_of(ic));
    return out;
}

ConstantSet constants_of(const Observation& o) { return constants_of(o.atoms); }

ConstantSet constants_of(const Explanation& e) {
    ConstantSet out = constants_of(e.add);
    out.merge(constants_of(e.del));
    return out;
}

Constant fresh_constant(const ConstantSet& avoid) {
    for (std::size_t k = 0;; ++k) {
        Constant c("$" + std::to_string(k));
        if (!avoid.contains(c)) return c;
    }
}

Atom rename_constants(const Atom& a, const std::function<Constant(const Constant&)>& map) {
    Atom out(a.predicate);
    out.args.reserve(a.args.size());
    for (const auto& t : a.args)
        out.args.push_back(t.is_constant() ? Term::constant(map(t.as_constant())) : t);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Constant& c) { return os << c.name(); }
std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.name(); }
std::ostream& operator<<(std::ostream& os, const PredicateSig& s) { return os << s.name << '/' << s.arity; }

std::ostream& operator<<(std::ostream& os, const Atom& a) {
    os << a.predicate;
    if (!a.args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) os << (i ? "," : "") << a.args[i];
        os << ')';
    }
    return os;
}

namespace {
void print_body(std::ostream& os, const std::vector<Atom>& pos, const std::vector<Atom>& neg) {
    bool first = true;
    for (const auto& a : pos) {
        os << (first ? "" : ", ") << a;
        first = false;
    }
    for (const auto& a : neg) {
        os << (first ? "" : ", ") << "not " << a;
        first = false;
    }
}
} // namespace

std::ostream& operator<<(std::ostream& os, const Rule& r) {
    os << r.head;
    if (!r.body_pos.empty() || !r.body_neg.empty()) {
        os << " :- ";
        print_body(os, r.body_pos, r.body_neg);
    }
    return os << '.';
}

std::ostream& operator<<(std::ostream& os, const IntegrityConstraint& ic) {
    os << "#ic";
    for (std::size_t i = 0; i < ic.head.size(); ++i) os << (i ? " | " : " ") << ic.head[i];
    os << " :- ";
    print_body(os, ic.body_pos, ic.body_neg);
    return os << '.';
}

std::string to_string(const Atom& a) {
    std::ostringstream s;
    s << a;
    return s.str();
}

std::string to_string(const AtomSet& atoms) {
    std::ostringstream s;
    s << '{';
    bool first = true;
    for (const auto& a : atoms) {
        s << (first ? "" : ", ") << a;
        first = false;
    }
    s << '}';
    return s.str();
}

std::string to_string(const Explanation& e) { return "(" + to_string(e.add) + ", " + to_string(e.del) + ")"; }

} // namespace abdux
