#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlambda {

enum class ErrorKind {
    Domain,
    Pole,
    Divergence,
    Policy,
    Convergence,
    Precision,
    OutOfScope,
    Parse,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Policy: return "policy";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::OutOfScope: return "out-of-scope";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

/// Base of every error raised by the library. The kind is what the CLI
/// serializes into structured error fields.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class TaggedError : public Error {
public:
    explicit TaggedError(const std::string& what) : Error(K, what) {}
};

using DomainError = TaggedError<ErrorKind::Domain>;
using PoleError = TaggedError<ErrorKind::Pole>;
using DivergenceError = TaggedError<ErrorKind::Divergence>;
using PolicyError = TaggedError<ErrorKind::Policy>;
using ConvergenceError = TaggedError<ErrorKind::Convergence>;
using PrecisionError = TaggedError<ErrorKind::Precision>;
using OutOfScopeError = TaggedError<ErrorKind::OutOfScope>;
using ParseError = TaggedError<ErrorKind::Parse>;

} // namespace qlambda
