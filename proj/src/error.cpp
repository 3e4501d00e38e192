#include "novikov/error.hpp"

namespace novikov {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MalformedSimplex: return "malformed-simplex";
        case ErrorKind::Degree: return "degree";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::IncompleteCocycle: return "incomplete-cocycle";
        case ErrorKind::Cocycle: return "cocycle";
        case ErrorKind::InvalidLoop: return "invalid-loop";
        case ErrorKind::InvalidMonodromy: return "invalid-monodromy";
        case ErrorKind::InvalidMap: return "invalid-map";
        case ErrorKind::Construction: return "construction";
        case ErrorKind::Integrality: return "integrality";
        case ErrorKind::BackendMismatch: return "backend-mismatch";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::Reducibility: return "reducibility";
        case ErrorKind::Weight: return "weight";
        case ErrorKind::Normalization: return "normalization";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Numerical: return "numerical";
        case ErrorKind::Usage: return "usage";
    }
    return "unknown";
}

}  // namespace novikov
