#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

/// Base of all library errors. The CLI maps these to exit code 2 (input
/// problems) or 1 (mathematical findings) via `is_finding()`.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual bool is_finding() const { return false; }
};

/// Dimension/degree mismatch, unknown label, bad file content.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// Preconditions of an operation are violated (wrong parity, exact unit, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// d^2 != 0, Leibniz failure and similar structural violations.
class AxiomViolation : public Error {
public:
    using Error::Error;
    bool is_finding() const override { return true; }
};

/// Q was applied to a vector outside the exact subspace.
class NotExact : public Error {
public:
    using Error::Error;
    bool is_finding() const override { return true; }
};

/// A supplied witness (e.g. correction term r) does not certify the claim.
class InvalidWitness : public Error {
public:
    using Error::Error;
    bool is_finding() const override { return true; }
};

/// Lower-arity data required by an inductive step is missing.
class DependencyError : public Error {
public:
    using Error::Error;
};

/// Argument outside the supported range.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Tuple-count budget exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

}  // namespace ainf
