//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/core.hpp"
#include "abdux/exec.hpp"

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace abdux {

using HerbrandModel = AtomSet;

/// Dense numbering of the ground atoms a program can talk about.
class AtomTable {
public:
    int intern(const Atom& a);
    std::optional<int> find(const Atom& a) const;
    const Atom& at(int id) const { return atoms_[static_cast<std::size_t>(id)]; }
    std::size_t size() const noexcept { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
    std::unordered_map<Atom, int, AtomHash> index_;
};

struct GroundRule {
    int head = 0;
    std::vector<int> pos;
    std::vector<int> neg;
    auto operator<=>(const GroundRule&) const = default;
};

/// Predicate-level dependency graph: an edge body -> head per body literal,
/// flagged when the literal is negated.
struct DependencyGraph {
    struct Edge {
        int to = 0;
        bool negative = false;
    };
    std::vector<PredicateSig> predicates;
    std::vector<std::vector<Edge>> edges;

    int index_of(const PredicateSig& s) const;
};

struct ProgramClass {
    bool stratified = false;
    bool non_recursive = false;
    bool horn = false;
    bool operator==(const ProgramClass&) const = default;
};

class GroundProgram {
public:
    AtomTable atoms;
    std::vector<GroundRule> rules;
    DependencyGraph graph;
    /// Stratum of each predicate in `graph`, valid when stratified.
    std::vector<int> predicate_stratum;
    int num_strata = 0;
    ProgramClass flags;

    int atom_stratum(int atom) const { return atom_stratum_[static_cast<std::size_t>(atom)]; }
    /// Rules with `atom` in their positive body.
    const std::vector<int>& watchers(int atom) const { return watchers_[static_cast<std::size_t>(atom)]; }
    const std::vector<int>& rules_in_stratum(int s) const { return stratum_rules_[static_cast<std::size_t>(s)]; }

    /// Fills stratification data and indexes; called by the grounders.
    void finalize(const std::vector<Rule>& source);

private:
    std::vector<int> atom_stratum_;
    std::vector<std::vector<int>> watchers_;
    std::vector<std::vector<int>> stratum_rules_;
};

/// Every instantiation of `rules` over the constants of `rules` plus `extra_constants`.
GroundProgram ground(const std::vector<Rule>& rules, const ConstantSet& extra_constants = {});

/// Instantiations whose positive body can become true when any subset of
/// `possible_facts` is added. Negative literals over atoms that can never
/// be derived are dropped. Every atom of `possible_facts` is in the table.
GroundProgram ground_relevant(const std::vector<Rule>& rules, const AtomSet& possible_facts);

ProgramClass classify(const GroundProgram& gp);
ProgramClass classify(const std::vector<Rule>& rules);

/// Bit per atom id of `gp.atoms`.
using ModelBits = std::vector<char>;

/// Perfect model of `gp` plus the extra facts. Linear in the size of the
/// ground program. Throws PreconditionError if `gp` is not stratified.
void evaluate_stratified(const GroundProgram& gp, const std::vector<int>& extra_facts, ModelBits& model);
HerbrandModel stable_model_stratified(const GroundProgram& gp);

/// All stable models (as bit vectors, ascending by the enumeration mask).
/// Throws CapExceeded when more than `cap_atoms` atoms are undetermined.
std::vector<ModelBits> stable_models_bits(const GroundProgram& gp, const std::vector<int>& extra_facts,
                                          std::size_t cap_atoms = 24, Exec exec = {});
std::vector<HerbrandModel> stable_models_bruteforce(const GroundProgram& gp, std::size_t cap_atoms = 24,
                                                    Exec exec = {});

HerbrandModel to_model(const GroundProgram& gp, const ModelBits& bits);

/// True iff no instantiation over `active_domain` of a constraint has its
/// body true and every head atom false in `m`.
bool eval_constraints(const HerbrandModel& m, const std::vector<IntegrityConstraint>& constraints,
                      const ConstantSet& active_domain);

/// Throws InconsistentProgram on an empty model set.
bool entails_skeptical(const std::vector<HerbrandModel>& models, const AtomSet& phi);

namespace detail {

/// Backtracking join of `body` against `facts` (grouped by predicate).
/// Calls `emit` with each complete binding (variable name -> constant).
using Binding = std::vector<std::pair<std::string, std::string>>;
using FactIndex = std::unordered_map<std::string, std::vector<const Atom*>>;

FactIndex index_facts(const AtomSet& facts);
void join(const std::vector<Atom>& body, const FactIndex& facts, const std::function<void(const Binding&)>& emit);
Atom substitute(const Atom& a, const Binding& b);

} // namespace detail

} // namespace abdux
