#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Relation closure produced x <= y <= x with x != y.
class CycleDetected : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

// A map's image table does not fit its declared domain/codomain.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// Exhaustive subset enumeration refused for a codomain over the bound.
class CodomainTooLarge : public Error {
public:
    using Error::Error;
};

class NotAHasseEdge : public Error {
public:
    using Error::Error;
};

class NotSurjective : public Error {
public:
    using Error::Error;
};

class NotContinuous : public Error {
public:
    using Error::Error;
};

// Thrown by decompose when the map cannot be written as edge contractions
// followed by an order isomorphism. Carries a witness: either the elements
// of an internally disconnected fiber, or the pair of codomain elements
// whose relation the final bijection fails to reflect.
class NotMonotone : public Error {
public:
    NotMonotone(const std::string& what, std::string kind, std::vector<std::string> witness)
        : Error(what), kind_(std::move(kind)), witness_(std::move(witness)) {}

    // "disconnected_fiber" or "relation_not_reflected"
    const std::string& kind() const { return kind_; }
    const std::vector<std::string>& witness() const { return witness_; }

private:
    std::string kind_;
    std::vector<std::string> witness_;
};

class EmptySpace : public Error {
public:
    using Error::Error;
};

class SweepTooLarge : public Error {
public:
    using Error::Error;
};

// Order complex would exceed the configured simplex budget.
class SimplexBudgetExceeded : public Error {
public:
    using Error::Error;
};

// The residual map of a factorization has a fiber that is not an antichain.
class DiscreteFiberViolation : public Error {
public:
    using Error::Error;
};

// Malformed poset/map file; message carries file and line.
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

} // namespace fintop
