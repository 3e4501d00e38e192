#include "novikov/twisted.hpp"

namespace novikov {

std::vector<Index> convolve(const std::vector<Index>& a, const std::vector<Index>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Index> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool kunneth_check(const BettiProfile& factor_k, const BettiProfile& factor_l, const BettiProfile& product) {
    return convolve(factor_k.dims, factor_l.dims) == product.dims;
}

}  // namespace novikov
