#pragma once

#include <stdexcept>
#include <string>

namespace cpokit {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed. Carries the 1-based offending line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A mathematical precondition or check failed (CLI exit code 1).
struct MathError : Error {
    using Error::Error;
};

struct CycleDetected : MathError {
    using MathError::MathError;
};
struct NoBottom : MathError {
    using MathError::MathError;
};
struct DuplicateElement : MathError {
    using MathError::MathError;
};
struct BoundTooLarge : MathError {
    using MathError::MathError;
};
struct NotCpoMap : MathError {
    using MathError::MathError;
};
struct NotCommuting : MathError {
    using MathError::MathError;
};
struct NotProperSubobject : MathError {
    using MathError::MathError;
};
struct NotExtremalEpi : MathError {
    using MathError::MathError;
};
struct CertificateGap : MathError {
    using MathError::MathError;
};
struct WitnessInvalid : MathError {
    using MathError::MathError;
};
struct IllFormedTerm : MathError {
    using MathError::MathError;
};

}  // namespace cpokit
