#pragma once

#include <stdexcept>
#include <string>

namespace pinch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (variables, order or modulus differ).
struct RingMismatchError : Error {
    using Error::Error;
};

/// A computation exceeded its explicit budget (S-pair count, degree cap).
/// Exceeding a budget is an error, never a silently truncated answer.
struct ResourceError : Error {
    using Error::Error;
};

/// Lattice data violates an invariant, or a classification is inconsistent
/// with the model's flags.
struct ModelError : Error {
    using Error::Error;
};

/// Malformed descriptor / report input.
struct SchemaError : Error {
    using Error::Error;
};

/// An operation was handed data outside its contract (wrong arity, point not
/// immersive, chart not normalized, positive-dimensional quotient, ...).
struct ContractError : Error {
    using Error::Error;
};

} // namespace pinch
