#pragma once

#include <stdexcept>
#include <string>

namespace manazel {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// input problems -> 2, astronomical no-event -> 3, scan exhaustion -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: files, dates, flags, hyperparameters. Exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Malformed content at a known 1-based line of a text input.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, long line)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Instant outside the supported 1900-2100 range.
class UnsupportedEpochError : public InputError {
public:
    using InputError::InputError;
};

// Option value outside what the implementation supports (e.g. non-linear kernel).
class UnsupportedOptionError : public InputError {
public:
    using InputError::InputError;
};

// A class has fewer members than the requested fold count.
class InfeasibleSplitError : public InputError {
public:
    using InputError::InputError;
};

// Operation requires a non-empty input.
class EmptyInputError : public InputError {
public:
    using InputError::InputError;
};

// Model file cannot be read back: bad magic, truncation, checksum mismatch.
class LoadError : public InputError {
public:
    using InputError::InputError;
};

// Sun (or Moon) never crosses the event altitude in the search window. Exit code 3.
class NoEventError : public Error {
public:
    using Error::Error;
};

// Optimizer stopped without reaching gradient tolerance; carries the final norm.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double grad_norm)
        : Error(msg), grad_norm_(grad_norm) {}
    double grad_norm() const { return grad_norm_; }

private:
    double grad_norm_;
};

}  // namespace manazel
