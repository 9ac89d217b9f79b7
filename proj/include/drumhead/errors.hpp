#pragma once

#include <stdexcept>
#include <string>

namespace drumhead {

// Bad user-facing input (grid sizes, model parameters, ranges).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Numerical failure inside an eigensolve (LAPACK error, reality check).
class SolverFailureError : public std::runtime_error {
public:
    explicit SolverFailureError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace drumhead
