#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace johnsimplex {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A simplex with zero volume was passed where a proper simplex is required.
class DegenerateSimplex : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The point set has fewer than d+1 points or does not affinely span R^d.
class DegeneratePointSet : public Error {
public:
    using Error::Error;
};

class EnumerationCapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal check contradicted a proven bound. Always a bug signal.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// The LP solver hit a state that the problem class rules out.
class SolverFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, 0 when not applicable.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace johnsimplex
