#pragma once

#include <stdexcept>
#include <string>

namespace dofrs {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (rationals, variable names, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

/// A constraint references a variable with no assigned value.
struct MissingVariableError : Error {
    using Error::Error;
};

/// A constraint with empty support reduced to a false statement
/// (0 <= c with c < 0, or 0 = c with c != 0).
struct InfeasibleConstantError : Error {
    using Error::Error;
};

/// substitute_equality was given an equality with zero coefficient on
/// the variable to eliminate.
struct VariableAbsentError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct EmptySetError : Error {
    using Error::Error;
};

/// Raised by optimization/enumeration when the polyhedron admits a
/// recession direction in the relevant sense.
struct UnboundedError : Error {
    using Error::Error;
};

/// Raised by maximize() on an infeasible system. The accompanying
/// Farkas certificate is available through geometry::feasible().
struct InfeasibleError : Error {
    using Error::Error;
};

}  // namespace dofrs
