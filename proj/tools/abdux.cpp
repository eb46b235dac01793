//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/abduction.hpp"
#include "abdux/arbitrariness.hpp"
#include "abdux/dimacs.hpp"
#include "abdux/error.hpp"
#include "abdux/parser.hpp"
#include "abdux/reductions.hpp"
#include "abdux/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace abdux;
using json = nlohmann::json;

namespace {

enum Exit { yes = 0, no = 1, input_error = 2, cap_error = 3 };

struct Args {
    std::string theory, observation, explanation, input, prefix;
    std::string type = "D";
    std::string minimality = "none";
    std::string kind;
    std::size_t max_add = 3, max_del = 0, with_fresh = 0;
    std::size_t cap_occurrences = 20, cap_atoms = 24;
    bool c_literal = false, json = false, rank = false, constrained = false, first = false;
    int jobs = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

struct Loaded {
    AbductiveTheory t;
    Observation o;
    Explanation e;
};

Loaded load(const Args& a, bool need_o, bool need_e) {
    Loaded l;
    l.t = parse_theory(slurp(a.theory), a.theory);
    if (need_o) {
        if (a.observation.empty()) throw ValidationError("an observation file (-o) is required");
        l.o = parse_observation(slurp(a.observation), a.observation);
        validate_observation(l.t, l.o);
    }
    if (need_e) {
        if (a.explanation.empty()) throw ValidationError("an explanation file (-e) is required");
        l.e = parse_explanation(slurp(a.explanation), a.explanation);
        validate_explanation(l.t, l.e);
    }
    return l;
}

SearchOptions options(const Args& a) {
    SearchOptions s;
    s.bounds = {a.max_add, a.max_del, a.with_fresh};
    s.arbitrariness.cap_occurrences = a.cap_occurrences;
    auto& sem = s.arbitrariness.semantics;
    sem.cap_atoms = a.cap_atoms;
    sem.agreement_c_literal = a.c_literal;
    sem.exec = a.jobs == 1 ? Exec::serial() : Exec::parallel(a.jobs);
    return s;
}

json atoms_json(const AtomSet& s) {
    json out = json::array();
    for (const auto& a : s) out.push_back(to_string(a));
    return out;
}

json explanation_json(const Explanation& e) { return {{"add", atoms_json(e.add)}, {"del", atoms_json(e.del)}}; }

using Clock = std::chrono::steady_clock;

json stats_json(std::uint64_t checked, Clock::time_point t0) {
    return {{"candidates_checked", checked},
            {"time_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
}

int emit(const Args& a, const json& j, const std::string& text, bool verdict) {
    if (a.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
    return verdict ? yes : no;
}

int cmd_check(const Args& a) {
    auto t0 = Clock::now();
    Loaded l = load(a, true, true);
    SearchOptions opts = options(a);
    AgreementType type = parse_agreement(a.type);
    std::vector<std::string> types;
    for (AgreementType t : all_agreement_types)
        if (is_explanation(l.t, l.o, l.e, t, opts.semantics())) types.emplace_back(1, to_char(t));
    Verdict v = is_explanation(l.t, l.o, l.e, type, opts.semantics());
    json j = {{"verdict", v.value}, {"explanation", explanation_json(l.e)}, {"types", types}};
    std::ostringstream text;
    if (!v) {
        text << "explanation: no (" << v.diagnostic << ")\n";
        j["stats"] = stats_json(1, t0);
        return emit(a, j, text.str(), false);
    }
    std::size_t deg = degree(l.t, l.o, l.e, type, opts.arbitrariness);
    j["degree"] = deg;
    j["constrained"] = deg == 0;
    j["stats"] = stats_json(1, t0);
    text << "explanation: yes (types ";
    for (std::size_t i = 0; i < types.size(); ++i) text << (i ? "," : "") << types[i];
    text << "), constrained: " << (deg == 0 ? "yes" : "no") << ", degree: " << deg << '\n';
    return emit(a, j, text.str(), true);
}

int cmd_degree(const Args& a, bool constrained_only) {
    auto t0 = Clock::now();
    Loaded l = load(a, true, true);
    SearchOptions opts = options(a);
    AgreementType type = parse_agreement(a.type);
    json j = {{"explanation", explanation_json(l.e)}};
    std::ostringstream text;
    bool verdict = true;
    if (constrained_only) {
        verdict = is_constrained(l.t, l.o, l.e, type, opts.arbitrariness);
        text << "constrained: " << (verdict ? "yes" : "no") << '\n';
    } else {
        std::size_t deg = degree(l.t, l.o, l.e, type, opts.arbitrariness);
        j["degree"] = deg;
        text << deg << '\n';
    }
    j["verdict"] = verdict;
    j["stats"] = stats_json(1, t0);
    return emit(a, j, text.str(), verdict);
}

int cmd_find(const Args& a) {
    auto t0 = Clock::now();
    Loaded l = load(a, true, false);
    SearchOptions opts = options(a);
    AgreementType type = parse_agreement(a.type);
    std::vector<Explanation> found;
    std::uint64_t checked = 0;
    std::string route;
    if (a.constrained && a.first && a.minimality == "none") {
        SearchResult r = find_constrained(l.t, l.o, type, opts);
        if (r.explanation) found.push_back(*r.explanation);
        checked = r.stats.candidates_checked;
        route = r.route;
    } else {
        auto collect = [&](const Explanation& e) {
            found.push_back(e);
            return !(a.first && a.minimality == "none" && !a.rank);
        };
        SearchStats s = a.constrained ? enumerate_constrained(l.t, l.o, type, opts, collect)
                                      : enumerate_explanations(l.t, l.o, type, opts, collect);
        checked = s.candidates_checked;
        route = "enumeration";
    }
    if (a.minimality == "subset")
        found = filter_subset_minimal(l.t, l.o, type, found, opts);
    else if (a.minimality == "card")
        found = filter_card_minimal(l.t, l.o, type, found, opts);

    std::vector<RankedExplanation> ranked;
    if (a.rank) {
        ranked = rank_by_arbitrariness(l.t, l.o, type, found, opts);
    } else {
        for (const auto& e : found) ranked.push_back({e, 0});
    }
    if (a.first && ranked.size() > 1) ranked.resize(1);

    std::ostringstream text;
    json list = json::array();
    for (const auto& r : ranked) {
        json item = explanation_json(r.explanation);
        text << to_string(r.explanation);
        if (a.rank) {
            item["degree"] = r.degree;
            text << "  degree " << r.degree;
        }
        text << '\n';
        list.push_back(std::move(item));
    }
    if (ranked.empty()) text << "no explanation found\n";
    json j = {{"verdict", !ranked.empty()}, {"explanations", list}, {"route", route}};
    if (!ranked.empty()) {
        j["explanation"] = explanation_json(ranked.front().explanation);
        if (a.rank) j["degree"] = ranked.front().degree;
    }
    j["stats"] = stats_json(checked, t0);
    return emit(a, j, text.str(), !ranked.empty());
}

int cmd_classify(const Args& a) {
    auto t0 = Clock::now();
    AbductiveTheory t = parse_theory(slurp(a.theory), a.theory);
    ProgramClass c = classify(t.program());
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream text;
    text << "stratified: " << yn(c.stratified) << "\nnon-recursive: " << yn(c.non_recursive) << "\nhorn: " << yn(c.horn)
         << "\nconstraints: " << t.constraints().size() << '\n';
    json j = {{"verdict", c.stratified},
              {"classification",
               {{"stratified", c.stratified},
                {"non_recursive", c.non_recursive},
                {"horn", c.horn},
                {"constraints", t.constraints().size()}}},
              {"stats", stats_json(0, t0)}};
    return emit(a, j, text.str(), true);
}

int cmd_gen(const Args& a) {
    std::string in = slurp(a.input);
    ReductionInstance r;
    if (a.kind == "thm4-sat")
        r = gen_thm4_sat(parse_dimacs(in, a.input));
    else if (a.kind == "thm5-sat")
        r = gen_thm5_sat(parse_dimacs(in, a.input));
    else if (a.kind == "thm6-sat")
        r = gen_thm6_sat(parse_dimacs(in, a.input));
    else if (a.kind == "thm4-qbf")
        r = gen_thm4_qbf(parse_qdimacs(in, a.input));
    else
        r = gen_thm5_qbf(parse_qdimacs(in, a.input));
    std::string theory = print_theory(r.theory), obs = print_observation(r.observation);
    std::string exp = r.explanation ? print_explanation(*r.explanation) : std::string{};
    if (!a.prefix.empty()) {
        write_file(a.prefix + ".abd", theory);
        write_file(a.prefix + ".obs", obs);
        if (r.explanation) write_file(a.prefix + ".exp", exp);
    } else {
        std::cout << "% theory\n" << theory << "% observation\n" << obs;
        if (r.explanation) std::cout << "% explanation\n" << exp;
    }
    return yes;
}

int cmd_oracle(const Args& a) {
    auto t0 = Clock::now();
    std::string in = slurp(a.input);
    Exec exec = a.jobs == 1 ? Exec::serial() : Exec::parallel(a.jobs);
    bool v;
    std::string text;
    if (a.kind == "sat") {
        v = sat_bruteforce(parse_dimacs(in, a.input), exec);
        text = v ? "SAT\n" : "UNSAT\n";
    } else {
        v = qbf_bruteforce(parse_qdimacs(in, a.input), exec);
        text = v ? "TRUE\n" : "FALSE\n";
    }
    return emit(a, {{"verdict", v}, {"stats", stats_json(0, t0)}}, text, v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abductive explanations with integrity constraints and degree of arbitrariness"};
    app.require_subcommand(1);
    Args a;

    auto semantics = [&](CLI::App* c) {
        c->add_option("--type", a.type, "Agreement type A, B, C or D")->capture_default_str();
        c->add_flag("--agreement-c-literal", a.c_literal, "Type C without requiring a model of the constraints");
        c->add_option("--cap-atoms", a.cap_atoms, "Undetermined atoms allowed in stable-model enumeration")
            ->capture_default_str();
        c->add_option("--cap-occurrences", a.cap_occurrences, "Occurrences allowed in replacement enumeration")
            ->capture_default_str();
        c->add_option("--jobs", a.jobs, "Worker threads (1 = serial, 0 = all cores)")->capture_default_str();
        c->add_flag("--json", a.json, "Machine-readable output");
    };
    auto files = [&](CLI::App* c, bool need_e) {
        c->add_option("-t,--theory", a.theory, "Theory file")->required();
        c->add_option("-o,--observation", a.observation, "Observation file")->required();
        if (need_e) c->add_option("-e,--explanation", a.explanation, "Explanation file")->required();
    };

    auto* check = app.add_subcommand("check", "Is the pair an explanation; its types and degree");
    files(check, true);
    semantics(check);
    auto* deg = app.add_subcommand("degree", "Degree of arbitrariness of an explanation");
    files(deg, true);
    semantics(deg);
    auto* con = app.add_subcommand("constrained", "Is an explanation constrained (degree 0)");
    files(con, true);
    semantics(con);

    auto* find = app.add_subcommand("find", "Enumerate explanations within bounds");
    files(find, false);
    semantics(find);
    find->add_option("--max-add", a.max_add, "Largest add part")->capture_default_str();
    find->add_option("--max-del", a.max_del, "Largest delete part")->capture_default_str();
    find->add_option("--with-fresh", a.with_fresh, "Fresh constants added to the candidate domain")
        ->capture_default_str();
    find->add_option("--minimality", a.minimality, "none, subset or card")
        ->check(CLI::IsMember({"none", "subset", "card"}))
        ->capture_default_str();
    find->add_flag("--rank-arbitrariness", a.rank, "Sort by degree of arbitrariness");
    find->add_flag("--constrained", a.constrained, "Only constrained explanations");
    find->add_flag("--first", a.first, "Stop at the first result");

    auto* cls = app.add_subcommand("classify", "Stratified / non-recursive / Horn");
    cls->add_option("-t,--theory", a.theory, "Theory file")->required();
    cls->add_flag("--json", a.json, "Machine-readable output");

    auto* gen = app.add_subcommand("gen", "Build a reduction instance from a CNF or QBF");
    gen->add_option("kind", a.kind, "thm4-sat, thm4-qbf, thm5-sat, thm5-qbf or thm6-sat")
        ->required()
        ->check(CLI::IsMember({"thm4-sat", "thm4-qbf", "thm5-sat", "thm5-qbf", "thm6-sat"}));
    gen->add_option("-i,--input", a.input, "DIMACS or QDIMACS file")->required();
    gen->add_option("--prefix", a.prefix, "Write <prefix>.abd, .obs and .exp instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "Brute-force SAT or QBF truth");
    oracle->add_option("kind", a.kind, "sat or qbf")->required()->check(CLI::IsMember({"sat", "qbf"}));
    oracle->add_option("-i,--input", a.input, "DIMACS or QDIMACS file")->required();
    oracle->add_option("--jobs", a.jobs, "Worker threads (1 = serial, 0 = all cores)")->capture_default_str();
    oracle->add_flag("--json", a.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : input_error;
    }

    try {
        if (*check) return cmd_check(a);
        if (*deg) return cmd_degree(a, false);
        if (*con) return cmd_degree(a, true);
        if (*find) return cmd_find(a);
        if (*cls) return cmd_classify(a);
        if (*gen) return cmd_gen(a);
        if (*oracle) return cmd_oracle(a);
    } catch (const CapExceeded& e) {
        std::cerr << "abdux: " << e.what() << '\n';
        return cap_error;
    } catch (const std::exception& e) {
        std::cerr << "abdux: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
