//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace abdux {

namespace {

struct Word {
    std::string_view text;
    SourceSpan span;
};

std::vector<Word> words_of(std::string_view line, std::size_t lineno, const std::string& file) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back({line.substr(i, j - i), SourceSpan{file, lineno, i + 1, j}});
        i = j;
    }
    return out;
}

long to_int(const Word& w) {
    long v = 0;
    auto [p, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
    if (ec != std::errc() || p != w.text.data() + w.text.size())
        throw ParseError(ParseError::Kind::syntax, w.span, "expected an integer, found '" + std::string(w.text) + "'");
    return v;
}

struct Body {
    std::string format;
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<std::pair<char, std::vector<int>>> prefix;
};

Body read(std::string_view text, const std::string& file, bool allow_prefix) {
    Body b;
    bool header = false;
    long declared = 0;
    Clause current;
    SourceSpan last{file, 1, 1, 1};
    std::size_t lineno = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        start = end + 1;
        auto ws = words_of(line, lineno, file);
        if (ws.empty() || ws[0].text == "c") continue;
        if (ws[0].text == "p") {
            if (header) throw ParseError(ParseError::Kind::syntax, ws[0].span, "duplicate problem line");
            if (ws.size() != 4) throw ParseError(ParseError::Kind::syntax, ws[0].span, "malformed header: expected 'p <format> <vars> <clauses>'");
            b.format = std::string(ws[1].text);
            long nv = to_int(ws[2]);
            declared = to_int(ws[3]);
            if (nv < 0 || declared < 0) throw ParseError(ParseError::Kind::syntax, ws[2].span, "malformed header: negative count");
            b.num_vars = static_cast<int>(nv);
            header = true;
            continue;
        }
        if (!header) throw ParseError(ParseError::Kind::syntax, ws[0].span, "malformed header: clause before problem line");
        if (ws[0].text == "e" || ws[0].text == "a") {
            if (!allow_prefix) throw ParseError(ParseError::Kind::syntax, ws[0].span, "quantifier line in a DIMACS CNF file");
            if (!b.clauses.empty() || !current.empty())
                throw ParseError(ParseError::Kind::syntax, ws[0].span, "quantifier line after clauses");
            std::vector<int> vars;
            bool closed = false;
            for (std::size_t k = 1; k < ws.size(); ++k) {
                long v = to_int(ws[k]);
                if (closed) throw ParseError(ParseError::Kind::syntax, ws[k].span, "text after terminating 0");
                if (v == 0) {
                    closed = true;
                    continue;
                }
                if (v < 0 || v > b.num_vars)
                    throw ParseError(ParseError::Kind::syntax, ws[k].span, "variable " + std::to_string(v) + " out of range");
                vars.push_back(static_cast<int>(v));
            }
            if (!closed) throw ParseError(ParseError::Kind::syntax, ws.back().span, "quantifier line must end with 0");
            b.prefix.emplace_back(ws[0].text[0], std::move(vars));
            continue;
        }
        for (const auto& w : ws) {
            long v = to_int(w);
            last = w.span;
            if (v == 0) {
                b.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(v) > b.num_vars)
                throw ParseError(ParseError::Kind::syntax, w.span,
                                 "variable " + std::to_string(std::labs(v)) + " out of range (header declares " +
                                     std::to_string(b.num_vars) + ")");
            current.push_back(static_cast<int>(v));
        }
    }
    if (!header) throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1}, "malformed header: missing problem line");
    if (!current.empty()) throw ParseError(ParseError::Kind::syntax, last, "last clause is not terminated by 0");
    if (static_cast<long>(b.clauses.size()) != declared)
        throw ParseError(ParseError::Kind::syntax, last,
                         "header declares " + std::to_string(declared) + " clauses, found " + std::to_string(b.clauses.size()));
    return b;
}

void print_clauses(std::ostringstream& os, const std::vector<Clause>& cls) {
    for (const auto& c : cls) {
        for (int l : c) os << l << ' ';
        os << "0\n";
    }
}

} // namespace

Cnf parse_dimacs(std::string_view text, const std::string& file) {
    Body b = read(text, file, false);
    if (b.format != "cnf")
        throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1}, "malformed header: expected 'p cnf'");
    return Cnf{b.num_vars, std::move(b.clauses)};
}

Qbf parse_qdimacs(std::string_view text, const std::string& file) {
    Body b = read(text, file, true);
    Qbf q;
    q.num_vars = b.num_vars;
    if (b.format == "cnf")
        q.form = Qbf::Matrix::cnf;
    else if (b.format == "dnf")
        q.form = Qbf::Matrix::dnf;
    else
        throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1}, "malformed header: expected 'p cnf' or 'p dnf'");
    // Accepted prefixes: [e block] [a block].
    std::size_t i = 0;
    if (i < b.prefix.size() && b.prefix[i].first == 'e') q.exists = b.prefix[i++].second;
    if (i < b.prefix.size() && b.prefix[i].first == 'a') q.forall = b.prefix[i++].second;
    if (i != b.prefix.size())
        throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1},
                         "unsupported quantifier pattern: expected one 'e' block followed by one 'a' block");
    std::set<int> bound;
    for (int v : q.exists)
        if (!bound.insert(v).second)
            throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1}, "variable " + std::to_string(v) + " quantified twice");
    for (int v : q.forall)
        if (!bound.insert(v).second)
            throw ParseError(ParseError::Kind::syntax, SourceSpan{file, 1, 1, 1}, "variable " + std::to_string(v) + " quantified twice");
    for (int v = 1; v <= q.num_vars; ++v)
        if (!bound.contains(v)) q.exists.push_back(v);
    q.matrix = std::move(b.clauses);
    return q;
}

std::string print_dimacs(const Cnf& cnf) {
    std::ostringstream os;
    os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    print_clauses(os, cnf.clauses);
    return os.str();
}

std::string print_qdimacs(const Qbf& q) {
    std::ostringstream os;
    os << "p " << (q.form == Qbf::Matrix::dnf ? "dnf" : "cnf") << ' ' << q.num_vars << ' ' << q.matrix.size() << '\n';
    if (!q.exists.empty()) {
        os << "e ";
        for (int v : q.exists) os << v << ' ';
        os << "0\n";
    }
    if (!q.forall.empty()) {
        os << "a ";
        for (int v : q.forall) os << v << ' ';
        os << "0\n";
    }
    print_clauses(os, q.matrix);
    return os.str();
}

} // namespace abdux
