#pragma once

#include <stdexcept>
#include <string>

#include "jstc/source_span.hpp"

namespace jstc {

/// Base for every error the pipeline can raise. Each carries the span it
/// points at (IO and subprocess errors use a whole-file span).
class Error : public std::runtime_error {
public:
    Error(std::string message, SourceSpan span)
        : std::runtime_error(to_string(span) + ": " + message),
          message_(std::move(message)),
          span_(std::move(span)) {}

    const std::string& message() const { return message_; }
    const SourceSpan& span() const { return span_; }

private:
    std::string message_;
    SourceSpan span_;
};

class LexError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    explicit IoError(std::string message, std::string file = {})
        : Error(std::move(message), SourceSpan{std::move(file), 1, 1, 1, 1}) {}
};

/// Raised by the constraint generator for a node with no typing rule.
/// Unreachable for anything the parser accepts.
class GenError : public Error {
public:
    using Error::Error;
};

/// Solver infrastructure failures (not type errors).
class SolveError : public std::runtime_error {
public:
    enum class Kind { Spawn, Timeout, MalformedOutput, BackendMismatch, Precondition };

    SolveError(Kind kind, std::string message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace jstc
