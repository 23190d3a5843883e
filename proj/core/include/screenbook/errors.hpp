#pragma once

#include <stdexcept>
#include <string>

namespace screenbook {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A model function returned a non-finite value; carries the offending type.
struct ModelEvaluationError : Error {
    ModelEvaluationError(const std::string& what, double theta_)
        : Error(what + " (theta=" + std::to_string(theta_) + ")"), theta(theta_) {}
    double theta;
};

// A quantity left the configured admissible range, or no bracket was found.
struct QuantityRangeError : Error {
    using Error::Error;
};

// The outside option is kinked at the requested type; treat it as a region boundary.
struct KinkError : Error {
    KinkError(const std::string& what, double theta_)
        : Error(what + " (theta=" + std::to_string(theta_) + ")"), theta(theta_) {}
    double theta;
};

struct BracketError : Error {
    using Error::Error;
};

// Adaptive quadrature ran out of depth; carries the partial value accumulated so far.
struct QuadratureError : Error {
    QuadratureError(const std::string& what, double partial_)
        : Error(what), partial(partial_) {}
    double partial;
};

struct SolverError : Error {
    using Error::Error;
};

// The binding-set topology fell outside the supported pattern.
struct StructureError : Error {
    using Error::Error;
};

struct GridError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct DegeneracyError : Error {
    using Error::Error;
};

struct OracleError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(const std::string& what, int line_ = -1)
        : Error(line_ >= 0 ? what + " (line " + std::to_string(line_) + ")" : what),
          line(line_) {}
    int line;
};

}  // namespace screenbook
