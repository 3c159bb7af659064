#pragma once

#include <stdexcept>
#include <string>

namespace ballot_rates {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is outside its documented domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A scoring rule needs a position the ballot data does not reveal.
class CensoredPosition : public Error {
public:
    using Error::Error;
};

/// The requested pair is ordered against (or tied with) its expected scores.
class OrientationError : public Error {
public:
    using Error::Error;
};

/// Two candidates straddling a tier boundary have tied expected scores, so
/// the mechanism has no well-defined asymptotic outcome for this goal.
class MismatchError : public Error {
public:
    MismatchError(const std::string& what, int i, int j)
        : Error(what), i(i), j(j) {}
    int i;  // candidate ids, 0-based
    int j;
};

/// The tier witness ordering is not unique (tied full-Borda scores at a boundary).
class AmbiguousTiers : public Error {
public:
    using Error::Error;
};

/// Truncation or simulation depth exceeds what the ballots recorded.
class InsufficientDepth : public Error {
public:
    using Error::Error;
};

/// A zero learning rate: no finite number of voters separates the pair.
class InseparableError : public Error {
public:
    using Error::Error;
};

/// Malformed ballot file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

}  // namespace ballot_rates
