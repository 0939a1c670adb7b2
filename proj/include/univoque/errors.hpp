#pragma once

#include <stdexcept>
#include <string>

namespace univoque {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation
/// (a base outside (1,2), a negative target, a word with the wrong last digit, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: numbers, digit strings, sequence literals.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A requested size exceeds a documented cap.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A computation hit its working-precision cap without reaching a decision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A comparison that drives a result stayed undecided at the precision cap.
/// Carries the index (digit position, gap number, ...) that failed to resolve
/// when one is meaningful; -1 otherwise.
class BoundaryError : public Error {
public:
    explicit BoundaryError(const std::string& what, long index = -1)
        : Error(what), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

/// No valid starting bracket for a root search: the supplied endpoints do not
/// straddle a sign change.
class BracketError : public Error {
public:
    using Error::Error;
};

namespace detail {

/// Internal control-flow signal: an enclosure comparison could not be decided
/// at the current working precision.  Adaptive drivers catch it and retry at
/// higher precision; it escapes to callers only as BoundaryError/PrecisionError.
class UndecidedError : public Error {
public:
    using Error::Error;
};

} // namespace detail
} // namespace univoque
