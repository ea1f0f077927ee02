#pragma once

#include <stdexcept>
#include <string>

namespace solgeom {

// Base class for runtime failures of toolkit operations. Configuration
// problems (bad keys, malformed values) use ConfigError so a front end can
// distinguish "your input is wrong" from "the computation failed".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(const std::string& msg) : Error(msg) {}
};

// Jet whose first partials fail the rank test (Gram determinant at or
// below the relative tolerance).
class DegenerateJetError : public Error {
public:
    explicit DegenerateJetError(const std::string& msg) : Error(msg) {}
};

class GridMismatchError : public Error {
public:
    explicit GridMismatchError(const std::string& msg) : Error(msg) {}
};

class EmptySampleError : public Error {
public:
    explicit EmptySampleError(const std::string& msg) : Error(msg) {}
};

// Raised when an inequality-chain check is requested for a profile that
// violates its pointwise preconditions (the chain is vacuous there).
class ConditionsViolatedError : public Error {
public:
    explicit ConditionsViolatedError(const std::string& msg) : Error(msg) {}
};

class BadDimensionError : public Error {
public:
    explicit BadDimensionError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace solgeom
