//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace abdux {

/// A constant symbol: a lowercase identifier, an integer literal, or a
/// minted fresh constant (`$<n>`, never accepted in theory input).
class Constant {
public:
    Constant() = default;
    explicit Constant(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    bool is_fresh() const noexcept { return !name_.empty() && name_.front() == '$'; }

    auto operator<=>(const Constant&) const = default;

private:
    std::string name_;
};

using ConstantSet = std::set<Constant>;

/// Either a constant or a variable (uppercase or underscore initial).
class Term {
public:
    enum class Kind : unsigned char { constant, variable };

    Term() = default;
    static Term constant(std::string name) { return Term(Kind::constant, std::move(name)); }
    static Term constant(const Constant& c) { return Term(Kind::constant, c.name()); }
    static Term variable(std::string name) { return Term(Kind::variable, std::move(name)); }

    Kind kind() const noexcept { return kind_; }
    bool is_variable() const noexcept { return kind_ == Kind::variable; }
    bool is_constant() const noexcept { return kind_ == Kind::constant; }
    const std::string& name() const noexcept { return name_; }
    Constant as_constant() const { return Constant(name_); }

    auto operator<=>(const Term&) const = default;

private:
    Term(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
    Kind kind_ = Kind::constant;
    std::string name_;
};

struct PredicateSig {
    std::string name;
    std::size_t arity = 0;
    auto operator<=>(const PredicateSig&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Atom() = default;
    explicit Atom(std::string pred, std::vector<Term> a = {})
        : predicate(std::move(pred)), args(std::move(a)) {}

    std::size_t arity() const noexcept { return args.size(); }
    PredicateSig signature() const { return {predicate, args.size()}; }
    bool is_ground() const noexcept;

    auto operator<=>(const Atom&) const = default;
};

/// Shorthand for building ground atoms in code: `ground_atom("p", {"a", "1"})`.
Atom ground_atom(std::string predicate, std::initializer_list<std::string> args = {});

struct AtomHash {
    std::size_t operator()(const Atom& a) const noexcept;
};

using AtomSet = std::set<Atom>;

/// `head :- body_pos, not body_neg.`  A fact has an empty body and a ground head.
struct Rule {
    Atom head;
    std::vector<Atom> body_pos;
    std::vector<Atom> body_neg;

    bool is_fact() const noexcept { return body_pos.empty() && body_neg.empty() && head.is_ground(); }
    auto operator<=>(const Rule&) const = default;
};

/// Universally closed `body ⊃ h1 ∨ ... ∨ hm`; an empty head is a denial.
struct IntegrityConstraint {
    std::vector<Atom> head;
    std::vector<Atom> body_pos;
    std::vector<Atom> body_neg;

    auto operator<=>(const IntegrityConstraint&) const = default;
};

/// Variables occurring in head or negative body must occur in the positive body.
bool is_safe(const Rule& r);
bool is_safe(const IntegrityConstraint& ic);

/// Program, abducible predicates and integrity constraints. The constructor
/// enforces that every rule with an abducible head is a ground fact and that
/// all rules and constraints are safe.
class AbductiveTheory {
public:
    AbductiveTheory() = default;
    AbductiveTheory(std::vector<Rule> program, std::set<PredicateSig> abducibles,
                    std::vector<IntegrityConstraint> constraints);

    const std::vector<Rule>& program() const noexcept { return program_; }
    const std::set<PredicateSig>& abducibles() const noexcept { return abducibles_; }
    const std::vector<IntegrityConstraint>& constraints() const noexcept { return constraints_; }

    bool is_abducible(const PredicateSig& sig) const { return abducibles_.contains(sig); }
    bool is_abducible(const Atom& a) const { return is_abducible(a.signature()); }

    /// B: the ground abducible facts of the program.
    const AtomSet& abducible_facts() const noexcept { return facts_b_; }
    /// R: every rule that is not an abducible fact.
    const std::vector<Rule>& remainder() const noexcept { return rules_r_; }

    std::size_t max_abducible_arity() const noexcept;

private:
    std::vector<Rule> program_;
    std::set<PredicateSig> abducibles_;
    std::vector<IntegrityConstraint> constraints_;
    AtomSet facts_b_;
    std::vector<Rule> rules_r_;
};

struct Observation {
    AtomSet atoms;
};

/// (E, F): abducibles to add and to delete.
struct Explanation {
    AtomSet add;
    AtomSet del;

    std::size_t size() const noexcept { return add.size() + del.size(); }
    bool disjoint() const;
    auto operator<=>(const Explanation&) const = default;
};

/// Deterministic total order used for every enumeration: size first, then
/// the add part as a sorted atom sequence, then the delete part.
bool explanation_order(const Explanation& a, const Explanation& b);

/// p(x)^k: position k (1-based) of a ground atom.
struct Occurrence {
    Atom atom;
    std::size_t position = 0;

    const Constant constant() const { return atom.args.at(position - 1).as_constant(); }
    auto operator<=>(const Occurrence&) const = default;
};

ConstantSet constants_of(const Atom& a);
ConstantSet constants_of(const AtomSet& atoms);
ConstantSet constants_of(const Rule& r);
ConstantSet constants_of(const IntegrityConstraint& ic);
ConstantSet constants_of(const AbductiveTheory& t);
ConstantSet constants_of(const Observation& o);
ConstantSet constants_of(const Explanation& e);

/// Lowest-index constant `$<n>` that is not in `avoid`.
Constant fresh_constant(const ConstantSet& avoid);

/// Applies `map` to every constant argument; variables are left alone.
Atom rename_constants(const Atom& a, const std::function<Constant(const Constant&)>& map);

std::ostream& operator<<(std::ostream& os, const Constant& c);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const PredicateSig& s);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Rule& r);
std::ostream& operator<<(std::ostream& os, const IntegrityConstraint& ic);

std::string to_string(const Atom& a);
std::string to_string(const AtomSet& atoms); // "{a, b}"
std::string to_string(const Explanation& e); // "({a}, {b})"

} // namespace abdux
