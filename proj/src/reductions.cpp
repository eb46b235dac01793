//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/reductions.hpp"

#include "abdux/error.hpp"
#include "abdux/kernels.hpp"
#include "abdux/parser.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

namespace abdux {

std::string reserved::clause(std::size_t i) { return "k_c" + std::to_string(i); }

std::string variable_name(int v, bool existential) { return (existential ? "x" : "y") + std::to_string(v); }

namespace {

bool literal_true(int lit, std::uint64_t assignment) {
    bool v = (assignment >> (std::abs(lit) - 1)) & 1U;
    return lit > 0 ? v : !v;
}

} // namespace

bool eval_cnf(const std::vector<Clause>& clauses, std::uint64_t assignment) {
    for (const auto& c : clauses) {
        bool sat = false;
        for (int lit : c) sat = sat || literal_true(lit, assignment);
        if (!sat) return false;
    }
    return true;
}

bool eval_dnf(const std::vector<Clause>& terms, std::uint64_t assignment) {
    for (const auto& t : terms) {
        bool all = true;
        for (int lit : t) all = all && literal_true(lit, assignment);
        if (all) return true;
    }
    return false;
}

std::vector<Clause> negate_dnf(const std::vector<Clause>& terms) {
    std::vector<Clause> out;
    for (const auto& t : terms) {
        Clause c;
        for (int lit : t) c.push_back(-lit);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

constexpr int max_oracle_vars = 20;

bool eval_matrix(const Qbf& q, std::uint64_t assignment) {
    return q.form == Qbf::Matrix::cnf ? eval_cnf(q.matrix, assignment) : eval_dnf(q.matrix, assignment);
}

std::uint64_t spread(const std::vector<int>& vars, std::uint64_t bits) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (bits >> i & 1U) out |= std::uint64_t{1} << (vars[i] - 1);
    return out;
}

void check_literals(const std::vector<Clause>& clauses, int num_vars, const char* what) {
    for (const auto& c : clauses) {
        if (c.empty()) throw PreconditionError(std::string("empty ") + what + " is not supported");
        for (int lit : c)
            if (lit == 0 || std::abs(lit) > num_vars)
                throw ValidationError("literal " + std::to_string(lit) + " is out of range");
    }
}

} // namespace

bool sat_bruteforce(const Cnf& cnf, Exec exec) {
    if (cnf.num_vars > max_oracle_vars) throw CapExceeded("SAT oracle is limited to 20 variables");
    check_literals(cnf.clauses, cnf.num_vars, "clause");
    auto bits = static_cast<unsigned>(cnf.num_vars);
    return kernels::first_assignment(bits, [&](std::uint64_t a) { return eval_cnf(cnf.clauses, a); }, exec) <
           (std::uint64_t{1} << bits);
}

bool qbf_bruteforce(const Qbf& q, Exec exec) {
    if (q.num_vars > max_oracle_vars) throw CapExceeded("QBF oracle is limited to 20 variables");
    auto xs = static_cast<unsigned>(q.exists.size());
    std::uint64_t ys = std::uint64_t{1} << q.forall.size();
    auto witness = kernels::first_assignment(
        xs,
        [&](std::uint64_t vx) {
            std::uint64_t base = spread(q.exists, vx);
            for (std::uint64_t vy = 0; vy < ys; ++vy)
                if (!eval_matrix(q, base | spread(q.forall, vy))) return false;
            return true;
        },
        exec);
    return witness < (std::uint64_t{1} << xs);
}

namespace {

struct Builder {
    std::ostringstream facts;
    std::string rules;

    void fact(const std::string& pred, std::initializer_list<std::string> args) {
        facts << pred << '(';
        bool first = true;
        for (const auto& a : args) {
            facts << (first ? "" : ",") << a;
            first = false;
        }
        facts << ").\n";
    }

    /// pos(a, c) and ngtd(a, c) for every literal of every clause.
    void clauses(const std::vector<Clause>& cls, const std::set<int>& existential) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            std::set<int> seen;
            for (int lit : cls[i]) {
                if (!seen.insert(lit).second) continue;
                int v = std::abs(lit);
                fact(lit > 0 ? "pos" : "ngtd", {variable_name(v, existential.contains(v)), reserved::clause(i + 1)});
            }
        }
    }

    ReductionInstance finish(const std::string& header, const std::string& ics = {}) {
        ReductionInstance r;
        r.theory = parse_theory(header + facts.str() + rules + ics, "<generated>");
        r.rules = parse_theory(rules, "<generated>").program();
        r.observation.atoms.insert(ground_atom("goal"));
        return r;
    }
};

std::string subst(std::string text, const std::string& key, const std::string& value) {
    for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at + value.size()))
        text.replace(at, key.size(), value);
    return text;
}

std::string with_reserved(std::string text) {
    text = subst(std::move(text), "@0", reserved::zero);
    text = subst(std::move(text), "@t", reserved::t);
    return subst(std::move(text), "@f", reserved::f);
}

void check_dnf_input(const Qbf& q) {
    if (q.form != Qbf::Matrix::dnf) throw PreconditionError("the QBF matrix must be a DNF (use a 'p dnf' header)");
    check_literals(q.matrix, q.num_vars, "term");
    if (q.num_vars > max_oracle_vars) throw CapExceeded("QBF inputs are limited to 20 variables");
    auto xs = static_cast<unsigned>(q.exists.size());
    for (std::uint64_t vx = 0; vx < (std::uint64_t{1} << xs); ++vx)
        if (!eval_dnf(q.matrix, spread(q.exists, vx)))
            throw PreconditionError("the all-false assignment to the universal variables must satisfy the matrix "
                                    "under every assignment to the existential variables");
}

Explanation p_explanation(int num_vars) {
    Explanation e;
    for (int v = 1; v <= num_vars; ++v) e.add.insert(ground_atom("p", {variable_name(v), reserved::zero}));
    e.add.insert(ground_atom("p", {reserved::f, reserved::zero}));
    return e;
}

} // namespace

ReductionInstance gen_thm4_sat(const Cnf& cnf) {
    check_literals(cnf.clauses, cnf.num_vars, "clause");
    if (eval_cnf(cnf.clauses, 0)) throw PreconditionError("the all-false assignment satisfies the formula");
    Builder b;
    for (int v = 1; v <= cnf.num_vars; ++v) b.fact("in_y", {variable_name(v)});
    b.fact("gate", {reserved::zero});
    b.clauses(cnf.clauses, {});
    b.rules = R"(clause(C) :- pos(A,C).
clause(C) :- ngtd(A,C).
true(A) :- in_y(A), gate(W), not choose(A,W).
holds(C) :- pos(A,C), true(A).
holds(C) :- ngtd(A,C), not true(A).
clfalse :- clause(C), not holds(C).
sat :- not clfalse.
sometrue :- in_y(A), true(A).
allfalse :- not sometrue.
bad :- choose(A,W), not in_y(A).
goal :- allfalse, not bad.
goal :- sat, not bad.
)";
    ReductionInstance r = b.finish("#abducible choose/2.\n");
    Explanation u;
    for (int v = 1; v <= cnf.num_vars; ++v) u.add.insert(ground_atom("choose", {variable_name(v), reserved::zero}));
    r.explanation = u;
    return r;
}

ReductionInstance gen_thm4_qbf(const Qbf& q) {
    check_dnf_input(q);
    std::set<int> ex(q.exists.begin(), q.exists.end());
    Builder b;
    for (int v : q.exists) b.fact("in_x", {variable_name(v, true)});
    for (int v : q.forall) b.fact("in_y", {variable_name(v)});
    b.fact("gate", {reserved::zero});
    b.clauses(negate_dnf(q.matrix), ex);
    b.rules = R"(clause(C) :- pos(A,C).
clause(C) :- ngtd(A,C).
true_y(A) :- in_y(A), gate(W), not choose(A,W).
true(A) :- true_x(A).
true(A) :- true_y(A).
holds(C) :- pos(A,C), true(A).
holds(C) :- ngtd(A,C), not true(A).
clfalse :- clause(C), not holds(C).
sat :- not clfalse.
sometrue :- in_y(A), true_y(A).
allfalse :- not sometrue.
bad :- choose(A,W), not in_y(A).
bad :- true_x(A), not in_x(A).
good(A) :- in_y(A), choose(A,W).
bad :- in_y(A), not good(A).
goal :- allfalse, not bad.
goal :- sat, not bad.
)";
    return b.finish("#abducible true_x/1.\n#abducible choose/2.\n");
}

ReductionInstance gen_thm5_sat(const Cnf& cnf) {
    check_literals(cnf.clauses, cnf.num_vars, "clause");
    if (cnf.clauses.empty()) throw PreconditionError("the formula needs at least one clause");
    Builder b;
    for (int v = 1; v <= cnf.num_vars; ++v) b.fact("in_y", {variable_name(v)});
    b.fact("in_y", {reserved::t});
    b.fact("in_y", {reserved::f});
    b.clauses(cnf.clauses, {});
    std::string prev = reserved::t;
    for (int v = 1; v <= cnf.num_vars; ++v) {
        b.fact("next", {prev, variable_name(v)});
        prev = variable_name(v);
    }
    b.fact("next", {prev, reserved::f});
    for (std::size_t i = 1; i < cnf.clauses.size(); ++i) b.fact("next_c", {reserved::clause(i), reserved::clause(i + 1)});
    b.fact("p", {reserved::t, reserved::zero});
    b.rules = with_reserved(R"(clause(C) :- pos(A,C).
clause(C) :- ngtd(A,C).
true(A) :- in_y(A), p(A,Z), p(@t,Z).
false(A) :- in_y(A), p(A,Z), p(@f,Z).
clsat(C) :- pos(A,C), true(A).
clsat(C) :- ngtd(A,C), false(A).
ok(@t).
ok(A) :- ok(A1), next(A1,A), true(A).
ok(A) :- ok(A1), next(A1,A), false(A).
ok(@f) :- ok(A1), next(A1,@f).
sat(@c1) :- clsat(@c1).
sat(C) :- sat(C1), next_c(C1,C), clsat(C).
goal :- ok(@f), sat(@cm), p(@f,Z).
)");
    b.rules = subst(subst(b.rules, "@c1", reserved::clause(1)), "@cm", reserved::clause(cnf.clauses.size()));
    ReductionInstance r = b.finish("#abducible p/2.\n");
    r.explanation = p_explanation(cnf.num_vars);
    return r;
}

ReductionInstance gen_thm5_qbf(const Qbf& q) {
    check_dnf_input(q);
    // The chains over X and Y need at least one element each; a variable
    // that does not occur in the matrix leaves the formula's truth unchanged.
    std::vector<int> xs = q.exists, ys = q.forall;
    int next_var = q.num_vars;
    if (xs.empty()) xs.push_back(++next_var);
    if (ys.empty()) ys.push_back(++next_var);
    std::set<int> ex(xs.begin(), xs.end());
    auto clauses = negate_dnf(q.matrix);

    Builder b;
    for (int v : xs) b.fact("in_x", {variable_name(v, true)});
    for (int v : ys) b.fact("in_y", {variable_name(v)});
    b.fact("in_y", {reserved::t});
    b.fact("in_y", {reserved::f});
    b.clauses(clauses, ex);
    b.fact("f_x", {variable_name(xs.front(), true)});
    b.fact("l_x", {variable_name(xs.back(), true)});
    b.fact("f_y", {variable_name(ys.front())});
    b.fact("l_y", {variable_name(ys.back())});
    b.fact("f_c", {reserved::clause(1)});
    b.fact("l_c", {reserved::clause(clauses.size())});
    for (std::size_t i = 1; i < xs.size(); ++i)
        b.fact("next_x", {variable_name(xs[i - 1], true), variable_name(xs[i], true)});
    for (std::size_t i = 1; i < ys.size(); ++i) b.fact("next_y", {variable_name(ys[i - 1]), variable_name(ys[i])});
    for (std::size_t i = 1; i < clauses.size(); ++i)
        b.fact("next_c", {reserved::clause(i), reserved::clause(i + 1)});
    b.fact("tr", {reserved::zero});
    b.rules = R"(clause(C) :- pos(A,C).
clause(C) :- ngtd(A,C).
true(A) :- in_x(A), true_x(A).
false(A) :- in_x(A), false_x(A).
true(B) :- in_x(B), true_x(A), false_x(A).
false(B) :- in_x(B), true_x(A), false_x(A).
true(B) :- in_y(B), true_x(A), false_x(A).
false(B) :- in_y(B), true_x(A), false_x(A).
true(A) :- in_y(A), assign(A,Z), tr(Z).
false(A) :- in_y(A), assign(A,Z), fa(Z).
clsat(C) :- pos(A,C), true(A).
clsat(C) :- ngtd(A,C), false(A).
ok_x(A) :- f_x(A), true(A).
ok_x(A) :- f_x(A), false(A).
ok_x(A) :- ok_x(A1), next_x(A1,A), true(A).
ok_x(A) :- ok_x(A1), next_x(A1,A), false(A).
good_x :- ok_x(A), l_x(A).
ok_y(A) :- f_y(A), true(A).
ok_y(A) :- f_y(A), false(A).
ok_y(A) :- ok_y(A1), next_y(A1,A), true(A).
ok_y(A) :- ok_y(A1), next_y(A1,A), false(A).
good_y :- ok_y(A), l_y(A).
sat(C) :- clsat(C), f_c(C).
sat(C) :- sat(C1), next_c(C1,C), clsat(C).
good_c :- sat(C), l_c(C).
goal :- good_x, good_y, good_c, fa(Z).
goal :- good_x, good_y, in_y(A), false(A), true(A), fa(Z).
)";
    return b.finish("#abducible true_x/1.\n#abducible false_x/1.\n#abducible assign/2.\n#abducible fa/1.\n");
}

ReductionInstance gen_thm6_sat(const Cnf& cnf) {
    check_literals(cnf.clauses, cnf.num_vars, "clause");
    Builder b;
    for (int v = 1; v <= cnf.num_vars; ++v) b.fact("in_y", {variable_name(v)});
    b.fact("in_y", {reserved::t});
    b.fact("in_y", {reserved::f});
    b.clauses(cnf.clauses, {});
    b.fact("p", {reserved::t, reserved::zero});
    b.rules = with_reserved(R"(clause(C) :- pos(A,C).
clause(C) :- ngtd(A,C).
true(A) :- in_y(A), p(A,Z), p(@t,Z).
false(A) :- in_y(A), p(A,Z), p(@f,Z).
clsat(C) :- pos(A,C), true(A).
clsat(C) :- ngtd(A,C), false(A).
goal :- p(@f,X).
)");
    ReductionInstance r = b.finish("#abducible p/2.\n", R"(#ic clsat(C) :- clause(C).
#ic false(A) | true(A) :- in_y(A).
)");
    r.explanation = p_explanation(cnf.num_vars);
    return r;
}

} // namespace abdux
