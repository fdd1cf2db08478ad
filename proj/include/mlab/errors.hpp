#pragma once

#include <stdexcept>
#include <string>

namespace mlab {

// Parameter point outside the admissible disc, or on the Omega_2(0)=0 circle.
class ForbiddenPointError : public std::runtime_error {
public:
    explicit ForbiddenPointError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's stated domain (negative step, t out of range, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Quadrature grid refinement failed to stabilize.
class NonConvergedError : public std::runtime_error {
public:
    explicit NonConvergedError(const std::string& what) : std::runtime_error(what) {}
};

// Bad sweep configuration; message names the offending field.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed grid CSV handed to the renderer.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlab
