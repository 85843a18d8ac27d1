#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different variable sets / different arities.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Evaluation point annihilates a denominator.
class PoleAtPoint : public Error {
public:
    using Error::Error;
};

/// Input text does not conform to the expression grammar.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Exact division was requested but the divisor does not divide the dividend.
class NotDivisible : public Error {
public:
    using Error::Error;
};

/// A monomial endomorphism has no monomial inverse.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A construction requires two distinct endomorphisms but received equal ones.
class EqualTwists : public Error {
public:
    using Error::Error;
};

/// An enlarging verification window changed the computed result.
class Unstable : public Error {
public:
    using Error::Error;
};

/// The operation is defined for one variable only.
class MultivariateUnsupported : public Error {
public:
    using Error::Error;
};

/// Every input of a GCD computation was zero.
class AllZero : public Error {
public:
    using Error::Error;
};

/// A required input was identically zero.
class ZeroInput : public Error {
public:
    using Error::Error;
};

/// The element is not invertible in the Laurent ring (not a single term).
class NotAUnit : public Error {
public:
    using Error::Error;
};

/// A supplied scaling function fails its compatibility law on the window.
class CompatFailed : public Error {
public:
    using Error::Error;
};

/// Supplied 2-cochain data violates a cocycle condition on the window.
class CocycleInvalid : public Error {
public:
    using Error::Error;
};

/// The verification window does not pin down the answer.
class UnderdeterminedWindow : public Error {
public:
    using Error::Error;
};

/// A parameter required by evaluation was not assigned a value.
class MissingAssignment : public Error {
public:
    using Error::Error;
};

/// A closed-form formula was requested outside its domain of validity.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace homlie
