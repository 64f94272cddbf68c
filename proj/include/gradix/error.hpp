#pragma once

#include <stdexcept>
#include <string>

namespace gradix {

// Domain errors map to CLI exit code 1, input errors to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 1; }
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& m) : Error("validation error: " + m) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& m) : Error("argument error: " + m) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& m) : Error("precondition error: " + m) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& m) : Error("division by zero: " + m) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& m) : Error("input error: " + m) {}
    int exit_code() const override { return 2; }
};

}  // namespace gradix
