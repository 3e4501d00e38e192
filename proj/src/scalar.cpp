#include "novikov/scalar.hpp"

namespace novikov {

const char* to_string(Backend backend) noexcept {
    switch (backend) {
        case Backend::Exact: return "exact";
        case Backend::NumberField: return "nf";
        case Backend::Float: return "float";
    }
    return "unknown";
}

}  // namespace novikov
