#pragma once

#include <stdexcept>
#include <string>

namespace l2k {

/// Malformed input document or value (CLI exit code 1).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a mathematical precondition, e.g. a trace that
/// is not normalized or a Cayley table that is not a group (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bar complex would exceed the configured scalar-dimension ceiling
/// (CLI exit code 3).
class DepthTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold for validated inputs failed.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace l2k
