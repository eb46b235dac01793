//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace abdux {

namespace {

std::string format_message(const SourceSpan& s, const std::string& msg) {
    std::ostringstream os;
    os << s.file << ':' << s.line << ':' << s.col_begin << ": " << msg;
    return os.str();
}

} // namespace

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : Error(format_message(span, message)), kind_(kind), span_(std::move(span)), detail_(message) {}

namespace {

enum class Tok { ident, variable, integer, fresh, directive, lparen, rparen, comma, dot, implies, bar, slash, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::ident: return "identifier";
    case Tok::variable: return "variable";
    case Tok::integer: return "integer";
    case Tok::fresh: return "fresh constant";
    case Tok::directive: return "directive";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::implies: return "':-'";
    case Tok::bar: return "'|'";
    case Tok::slash: return "'/'";
    case Tok::end: return "end of input";
    }
    return "token";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text, const std::string& file) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto span = [&](std::size_t c0, std::size_t len) {
        return SourceSpan{file, line, c0, c0 + (len ? len - 1 : 0)};
    };
    auto take = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            take(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i, c0 = col;
        auto word = [&](std::size_t from) {
            std::size_t j = from;
            while (j < text.size() && ident_char(text[j])) ++j;
            return j;
        };
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t j = word(i);
            out.push_back({Tok::ident, std::string(text.substr(start, j - start)), span(c0, j - start)});
            take(j - start);
        } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = word(i);
            out.push_back({Tok::variable, std::string(text.substr(start, j - start)), span(c0, j - start)});
            take(j - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && ident_char(text[j]))
                throw ParseError(ParseError::Kind::syntax, span(c0, j - start + 1), "malformed integer constant");
            out.push_back({Tok::integer, std::string(text.substr(start, j - start)), span(c0, j - start)});
            take(j - start);
        } else if (c == '$') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1) throw ParseError(ParseError::Kind::syntax, span(c0, 1), "'$' must be followed by digits");
            out.push_back({Tok::fresh, std::string(text.substr(start, j - start)), span(c0, j - start)});
            take(j - start);
        } else if (c == '#') {
            std::size_t j = word(i + 1);
            if (j == i + 1) throw ParseError(ParseError::Kind::syntax, span(c0, 1), "expected directive name after '#'");
            out.push_back({Tok::directive, std::string(text.substr(start, j - start)), span(c0, j - start)});
            take(j - start);
        } else if (c == ':' && i + 1 < text.size() && text[i + 1] == '-') {
            out.push_back({Tok::implies, ":-", span(c0, 2)});
            take(2);
        } else {
            Tok k;
            switch (c) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            case '.': k = Tok::dot; break;
            case '|': k = Tok::bar; break;
            case '/': k = Tok::slash; break;
            default:
                throw ParseError(ParseError::Kind::syntax, span(c0, 1), std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), span(c0, 1)});
            take(1);
        }
    }
    out.push_back({Tok::end, "", SourceSpan{file, line, col, col}});
    return out;
}

struct Literal {
    Atom atom;
    bool negated = false;
    SourceSpan span;
};

class Parser {
public:
    Parser(std::string_view text, const std::string& file, bool allow_fresh)
        : toks_(lex(text, file)), allow_fresh_(allow_fresh) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_end() const { return at(Tok::end); }

    const Token& expect(Tok k) {
        if (!at(k))
            throw ParseError(ParseError::Kind::syntax, peek().span,
                             std::string("expected ") + describe(k) + ", found " + describe(peek().kind) +
                                 (peek().text.empty() ? "" : " '" + peek().text + "'"));
        return toks_[pos_++];
    }

    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }

    Term term() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::ident:
        case Tok::integer: ++pos_; return Term::constant(t.text);
        case Tok::variable: ++pos_; return Term::variable(t.text);
        case Tok::fresh:
            if (!allow_fresh_)
                throw ParseError(ParseError::Kind::syntax, t.span, "reserved constant '" + t.text + "' not allowed here");
            ++pos_;
            return Term::constant(t.text);
        default:
            throw ParseError(ParseError::Kind::syntax, t.span, std::string("expected a term, found ") + describe(t.kind));
        }
    }

    std::pair<Atom, SourceSpan> atom() {
        const Token& name = expect(Tok::ident);
        if (name.text == "not")
            throw ParseError(ParseError::Kind::syntax, name.span, "'not' cannot be used as a predicate name");
        Atom a(name.text);
        SourceSpan sp = name.span;
        if (accept(Tok::lparen)) {
            a.args.push_back(term());
            while (accept(Tok::comma)) a.args.push_back(term());
            const Token& close = expect(Tok::rparen);
            if (close.span.line == sp.line) sp.col_end = close.span.col_end;
        }
        return {std::move(a), sp};
    }

    Atom ground_atom_stmt() {
        auto [a, sp] = atom();
        if (!a.is_ground()) throw ParseError(ParseError::Kind::non_ground, sp, "atom must be ground: " + to_string(a));
        expect(Tok::dot);
        return a;
    }

    Literal literal() {
        if (peek().kind == Tok::ident && peek().text == "not" && peek2().kind == Tok::ident) {
            SourceSpan s = peek().span;
            ++pos_;
            auto [a, sp] = atom();
            s.col_end = sp.line == s.line ? sp.col_end : s.col_end;
            return {std::move(a), true, s};
        }
        auto [a, sp] = atom();
        return {std::move(a), false, sp};
    }

    std::vector<Literal> body() {
        std::vector<Literal> out;
        out.push_back(literal());
        while (accept(Tok::comma)) out.push_back(literal());
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool allow_fresh_;
};

void split_body(std::vector<Literal>& lits, std::vector<Atom>& pos, std::vector<Atom>& neg) {
    for (auto& l : lits) (l.negated ? neg : pos).push_back(std::move(l.atom));
}

void collect_sigs(const std::vector<Atom>& atoms, std::set<PredicateSig>& out) {
    for (const auto& a : atoms) out.insert(a.signature());
}

} // namespace

AbductiveTheory parse_theory(std::string_view text, const std::string& file) {
    Parser p(text, file, false);
    std::vector<Rule> rules;
    std::vector<SourceSpan> rule_spans;
    std::vector<IntegrityConstraint> ics;
    std::vector<SourceSpan> ic_spans;
    std::set<PredicateSig> abducibles;

    while (!p.at_end()) {
        if (p.at(Tok::directive)) {
            Token d = p.expect(Tok::directive);
            if (d.text == "#abducible") {
                const Token& name = p.expect(Tok::ident);
                p.expect(Tok::slash);
                const Token& n = p.expect(Tok::integer);
                p.expect(Tok::dot);
                abducibles.insert({name.text, std::stoul(n.text)});
            } else if (d.text == "#ic") {
                IntegrityConstraint ic;
                if (!p.at(Tok::implies)) {
                    ic.head.push_back(p.atom().first);
                    while (p.accept(Tok::bar)) ic.head.push_back(p.atom().first);
                }
                p.expect(Tok::implies);
                auto lits = p.body();
                p.expect(Tok::dot);
                split_body(lits, ic.body_pos, ic.body_neg);
                if (!is_safe(ic))
                    throw ParseError(ParseError::Kind::safety, d.span,
                                     "unsafe integrity constraint: every variable must occur in a positive body atom");
                ics.push_back(std::move(ic));
                ic_spans.push_back(d.span);
            } else {
                throw ParseError(ParseError::Kind::syntax, d.span, "unknown directive " + d.text);
            }
            continue;
        }
        auto [head, hspan] = p.atom();
        Rule r{std::move(head), {}, {}};
        if (p.accept(Tok::implies)) {
            auto lits = p.body();
            split_body(lits, r.body_pos, r.body_neg);
        }
        p.expect(Tok::dot);
        if (!is_safe(r))
            throw ParseError(ParseError::Kind::safety, hspan,
                             "unsafe rule: variables in the head or under 'not' must occur in a positive body atom");
        rules.push_back(std::move(r));
        rule_spans.push_back(hspan);
    }

    for (std::size_t i = 0; i < rules.size(); ++i)
        if (abducibles.contains(rules[i].head.signature()) && !rules[i].is_fact())
            throw ParseError(ParseError::Kind::abducible_head, rule_spans[i],
                             "rule with abducible head " + to_string(rules[i].head) + " must be a ground fact");

    std::set<PredicateSig> known = abducibles;
    for (const auto& r : rules) {
        known.insert(r.head.signature());
        collect_sigs(r.body_pos, known);
        collect_sigs(r.body_neg, known);
    }
    for (std::size_t i = 0; i < ics.size(); ++i) {
        std::set<PredicateSig> used;
        collect_sigs(ics[i].head, used);
        collect_sigs(ics[i].body_pos, used);
        collect_sigs(ics[i].body_neg, used);
        for (const auto& s : used)
            if (!known.contains(s)) {
                std::ostringstream os;
                os << "integrity constraint mentions undeclared predicate " << s;
                throw ParseError(ParseError::Kind::undeclared, ic_spans[i], os.str());
            }
    }
    return AbductiveTheory(std::move(rules), std::move(abducibles), std::move(ics));
}

Observation parse_observation(std::string_view text, const std::string& file) {
    Parser p(text, file, false);
    Observation o;
    while (!p.at_end()) o.atoms.insert(p.ground_atom_stmt());
    return o;
}

Explanation parse_explanation(std::string_view text, const std::string& file) {
    Parser p(text, file, true);
    Explanation e;
    std::map<Atom, SourceSpan> seen;
    while (!p.at_end()) {
        Token d = p.expect(Tok::directive);
        bool add;
        if (d.text == "#add")
            add = true;
        else if (d.text == "#del")
            add = false;
        else
            throw ParseError(ParseError::Kind::syntax, d.span, "expected #add or #del, found " + d.text);
        Atom a = p.ground_atom_stmt();
        if ((add ? e.del : e.add).contains(a))
            throw ParseError(ParseError::Kind::overlap, d.span,
                             "atom " + to_string(a) + " is both added and deleted");
        (add ? e.add : e.del).insert(std::move(a));
    }
    return e;
}

void validate_observation(const AbductiveTheory& t, const Observation& o) {
    for (const auto& a : o.atoms)
        if (t.is_abducible(a)) throw ValidationError("observation atom " + to_string(a) + " has an abducible predicate");
}

void validate_explanation(const AbductiveTheory& t, const Explanation& e) {
    for (const auto* part : {&e.add, &e.del})
        for (const auto& a : *part)
            if (!t.is_abducible(a)) throw ValidationError("explanation atom " + to_string(a) + " is not abducible");
}

std::string print_theory(const AbductiveTheory& t) {
    std::ostringstream os;
    for (const auto& s : t.abducibles()) os << "#abducible " << s << ".\n";
    for (const auto& r : t.program()) os << r << '\n';
    for (const auto& ic : t.constraints()) os << ic << '\n';
    return os.str();
}

std::string print_observation(const Observation& o) {
    std::ostringstream os;
    for (const auto& a : o.atoms) os << a << ".\n";
    return os.str();
}

std::string print_explanation(const Explanation& e) {
    std::ostringstream os;
    for (const auto& a : e.add) os << "#add " << a << ".\n";
    for (const auto& a : e.del) os << "#del " << a << ".\n";
    return os.str();
}

} // namespace abdux
