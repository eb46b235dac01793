//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/core.hpp"
#include "abdux/error.hpp"

#include <string>
#include <string_view>

namespace abdux {

/// 1-based; `col_end` is inclusive.
struct SourceSpan {
    std::string file;
    std::size_t line = 1;
    std::size_t col_begin = 1;
    std::size_t col_end = 1;
};

class ParseError : public Error {
public:
    enum class Kind : unsigned char { syntax, safety, abducible_head, undeclared, non_ground, overlap };

    ParseError(Kind kind, SourceSpan span, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    const SourceSpan& span() const noexcept { return span_; }
    /// The message without the "file:line:col: " prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    SourceSpan span_;
    std::string detail_;
};

AbductiveTheory parse_theory(std::string_view text, const std::string& file = "<theory>");
Observation parse_observation(std::string_view text, const std::string& file = "<observation>");
Explanation parse_explanation(std::string_view text, const std::string& file = "<explanation>");

/// Rejects observations mentioning abducible predicates.
void validate_observation(const AbductiveTheory& t, const Observation& o);
/// Rejects explanations mentioning non-abducible predicates.
void validate_explanation(const AbductiveTheory& t, const Explanation& e);

std::string print_theory(const AbductiveTheory& t);
std::string print_observation(const Observation& o);
std::string print_explanation(const Explanation& e);

} // namespace abdux
