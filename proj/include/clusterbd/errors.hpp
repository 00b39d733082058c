#pragma once

#include <stdexcept>
#include <string>

namespace clusterbd {

/// Base class for precondition and domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("polynomials live in different variable contexts") {}
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'") {}
};

class NonUnitSubstitution : public Error {
public:
    explicit NonUnitSubstitution(const std::string& name)
        : Error("variable '" + name + "' occurs with a negative power but its image is not a monomial") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

class ZeroAtNegativePower : public Error {
public:
    explicit ZeroAtNegativePower(const std::string& name)
        : Error("variable '" + name + "' is zero but occurs with a negative power") {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

}  // namespace clusterbd
