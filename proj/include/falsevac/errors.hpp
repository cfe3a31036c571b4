#pragma once

#include <stdexcept>
#include <string>

namespace falsevac {

// Base class for every error raised by the library. Each subclass maps onto
// one CLI exit status (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input violates an operation's precondition. `field()` names the
// offending parameter so front ends can report it.
class PreconditionError : public Error {
public:
    PreconditionError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Iterative solver or integrator failed to converge.
class SolverError : public Error {
public:
    using Error::Error;
};

// Run configuration could not be parsed or contains unknown keys.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace falsevac
