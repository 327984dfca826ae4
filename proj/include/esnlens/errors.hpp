#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace esnlens {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid hyperparameters, flags or API misuse. CLI exit code 2.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Dimension mismatches between matrices/vectors handed to an operation.
class ShapeError : public ConfigError {
  public:
    using ConfigError::ConfigError;
};

/// Unreadable or malformed input files. CLI exit code 3.
class DataError : public Error {
  public:
    using Error::Error;
};

/// Failed numerical procedure (non-convergence, singular system). CLI exit code 4.
class NumericError : public Error {
  public:
    explicit NumericError(const std::string& msg,
                          double best_estimate = std::nan(""))
        : Error(msg), best_estimate(best_estimate) {}

    double best_estimate;
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NumericError*>(&e)) return 4;
    if (dynamic_cast<const DataError*>(&e)) return 3;
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    return 1;
}

}  // namespace esnlens
