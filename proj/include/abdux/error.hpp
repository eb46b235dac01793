//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include <stdexcept>
#include <string>

namespace abdux {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a structural requirement (unsafe rule, abducible rule head, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configurable resource cap (atoms, occurrences, candidates, variables) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Skeptical entailment was asked of a program without stable models.
class InconsistentProgram : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace abdux
