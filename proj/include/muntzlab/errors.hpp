#pragma once

#include <stdexcept>
#include <string>

namespace muntzlab {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter lies outside its mathematical domain (rho > 1, alpha <= -1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Operation asked to act on an input it cannot handle (zero polynomial, empty grid).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// An exponent or element does not belong to the structure it must belong to.
class MembershipError : public Error {
public:
    using Error::Error;
};

// A documented precondition (f(0)=0, tail envelope, conjugate exponents) is violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Spec-file / JSON parse failure; `field` names the offending entry.
class ParseError : public Error {
public:
    ParseError(const std::string& field, const std::string& what)
        : Error("parse error in field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// A numerical routine could not reach the requested tolerance.  Carries the
// best estimate and the achieved error bound.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double estimate, double achieved_bound)
        : Error(what), estimate_(estimate), bound_(achieved_bound) {}
    double estimate() const { return estimate_; }
    double achieved_bound() const { return bound_; }

private:
    double estimate_;
    double bound_;
};

}  // namespace muntzlab
