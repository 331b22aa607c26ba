#pragma once

#include <stdexcept>
#include <string>

namespace hotcold {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad inputs: malformed files, invalid config keys, violated preconditions.
/// The CLI maps this to exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Failures during model fitting (empty partitions, non-finite gradients,
/// degenerate data). The CLI maps this to exit code 2.
class TrainingError : public Error {
public:
    explicit TrainingError(const std::string& msg) : Error(msg) {}
};

} // namespace hotcold
