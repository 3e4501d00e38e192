#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

enum class ErrorKind {
    MalformedSimplex,
    Degree,
    Parameter,
    IncompleteCocycle,
    Cocycle,
    InvalidLoop,
    InvalidMonodromy,
    InvalidMap,
    Construction,
    Integrality,
    BackendMismatch,
    DivisionByZero,
    Reducibility,
    Weight,
    Normalization,
    Parse,
    Numerical,
    Usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; the kind selects the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace novikov
