#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "novikov/cocycle.hpp"
#include "novikov/rank.hpp"
#include "novikov/simplicial_complex.hpp"

namespace novikov {

/// Weight lambda^value of one edge of the rank-one local system.
template <class Scalar, class Value>
Scalar edge_weight(const Scalar& lambda, Value value) {
    if constexpr (std::is_integral_v<Value>) {
        return pow_int(lambda, static_cast<std::int64_t>(value));
    } else {
        static_assert(is_float_v<Scalar>, "real-valued cocycles need the floating backend");
        if constexpr (std::is_same_v<Scalar, double>) {
            if (lambda < 0.0 && std::floor(value) != value)
                throw Error(ErrorKind::InvalidMonodromy,
                            "negative lambda with a non-integral exponent needs the complex backend");
        }
        return std::pow(lambda, value);
    }
}

/// Per-edge weights lambda^theta(e), in edge order.
template <class Scalar, class Value>
std::vector<Scalar> local_system_weights(const SimplicialComplex& K, const OneCocycle<Value>& theta,
                                         const Scalar& lambda) {
    require_defined(K, theta);
    if (is_zero(lambda)) throw Error(ErrorKind::InvalidMonodromy, "lambda must be nonzero");
    std::vector<Scalar> w;
    w.reserve(theta.values().size());
    for (const auto& v : theta.values()) w.push_back(edge_weight(lambda, v));
    return w;
}

namespace detail {

template <class Scalar>
struct Entry {
    Index row;
    Index col;
    Scalar value;
};

/// Nonzero entries of the twisted coboundary C^p -> C^{p+1}, row-major order.
///   (delta f)(v0..v_{p+1}) = w(v0,v1) f(v1..v_{p+1}) + sum_{i>=1} (-1)^i f(v0..^vi..v_{p+1})
template <class Scalar>
std::vector<Entry<Scalar>> twisted_entries(const SimplicialComplex& K, const std::vector<Scalar>& weights, int p) {
    std::vector<Entry<Scalar>> out;
    const auto& rows = K.simplices(p + 1);
    out.reserve(rows.size() * static_cast<std::size_t>(p + 2));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Simplex& s = rows[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            Scalar coeff;
            if (i == 0) {
                coeff = weights[static_cast<std::size_t>(K.index_of({s[0], s[1]}))];
            } else {
                coeff = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
            }
            out.push_back({static_cast<Index>(r), K.index_of(face), std::move(coeff)});
        }
    }
    return out;
}

template <class Scalar, class Value>
void check_twisted_inputs(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda) {
    if (is_zero(lambda)) throw Error(ErrorKind::InvalidMonodromy, "lambda must be nonzero");
    require_closed(K, theta);
}

}  // namespace detail

/// Matrix of the twisted coboundary from p-cochains to (p+1)-cochains; rows
/// are (p+1)-simplices, columns p-simplices. For p = dim K it has no rows.
template <class Scalar, class Value>
Mat<Scalar> twisted_coboundary(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                               int p) {
    if (p < 0 || p > K.dimension())
        throw Error(ErrorKind::Degree, "twisted coboundary degree " + std::to_string(p) + " out of range");
    detail::check_twisted_inputs(K, theta, lambda);
    const auto weights = local_system_weights(K, theta, lambda);
    Mat<Scalar> M = Mat<Scalar>::Zero(K.count(p + 1), K.count(p));
    for (auto& e : detail::twisted_entries(K, weights, p)) M(e.row, e.col) = std::move(e.value);
    return M;
}

/// Dimensions of H^p(K; lambda^theta) for p = 0..dim K.
struct BettiProfile {
    std::vector<Index> dims;
    std::int64_t euler = 0;
    std::string lambda;
    Backend backend = Backend::Exact;
    std::optional<double> tolerance;  // float backend only
    bool ill_conditioned = false;
    std::vector<Index> ranks;  // rank of delta_p, p = 0..dim K

    friend bool operator==(const BettiProfile& a, const BettiProfile& b) { return a.dims == b.dims; }
};

template <class Scalar, class Value>
BettiProfile betti_profile(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                           RankMode mode = default_rank_mode<Scalar>()) {
    detail::check_twisted_inputs(K, theta, lambda);
    const auto weights = local_system_weights(K, theta, lambda);
    const int n = K.dimension();
    BettiProfile profile;
    profile.lambda = scalar_to_string(lambda);
    profile.backend = mode.exact ? backend_of<Scalar>() : Backend::Float;
    if (!mode.exact) profile.tolerance = mode.tolerance;
    if (mode.exact && !is_exact_v<Scalar>)
        throw Error(ErrorKind::BackendMismatch, "exact rank requested with a floating lambda");

    profile.ranks.assign(static_cast<std::size_t>(std::max(n + 1, 0)), 0);
    for (int p = 0; p < n; ++p) {
        auto entries = detail::twisted_entries(K, weights, p);
        if constexpr (is_exact_v<Scalar>) {
            if (mode.exact) {
                std::vector<detail::SparseRow<Scalar>> rows(static_cast<std::size_t>(K.count(p + 1)));
                for (auto& e : entries) rows[static_cast<std::size_t>(e.row)].emplace_back(e.col, std::move(e.value));
                for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                profile.ranks[static_cast<std::size_t>(p)] = row_echelon<Scalar>(std::move(rows), K.count(p)).rank();
                continue;
            }
        }
        Mat<Scalar> M = Mat<Scalar>::Zero(K.count(p + 1), K.count(p));
        for (auto& e : entries) M(e.row, e.col) = std::move(e.value);
        NumericalRank nr = numerical_rank(M, mode.tolerance);
        profile.ranks[static_cast<std::size_t>(p)] = nr.rank;
        profile.ill_conditioned = profile.ill_conditioned || nr.ill_conditioned;
    }
    for (int p = 0; p <= n; ++p) {
        Index d = K.count(p) - profile.ranks[static_cast<std::size_t>(p)];
        if (p > 0) d -= profile.ranks[static_cast<std::size_t>(p - 1)];
        profile.dims.push_back(d);
        profile.euler += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d);
    }
    return profile;
}

/// Sequence convolution; the dimension count of a product local system.
std::vector<Index> convolve(const std::vector<Index>& a, const std::vector<Index>& b);

bool kunneth_check(const BettiProfile& factor_k, const BettiProfile& factor_l, const BettiProfile& product);

struct DualityResult {
    bool holds = false;
    BettiProfile forward;   // at lambda
    BettiProfile backward;  // at 1/lambda
};

/// dims(lambda)[p] == dims(1/lambda)[n-p] for all p. The caller asserts that K
/// is a closed orientable combinatorial manifold.
template <class Scalar, class Value>
DualityResult duality_check(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                            RankMode mode = default_rank_mode<Scalar>()) {
    if (is_zero(lambda)) throw Error(ErrorKind::InvalidMonodromy, "lambda must be nonzero");
    DualityResult r;
    r.forward = betti_profile(K, theta, lambda, mode);
    r.backward = betti_profile(K, theta, multiplicative_inverse(lambda), mode);
    const auto n = r.forward.dims.size();
    r.holds = r.backward.dims.size() == n;
    for (std::size_t p = 0; r.holds && p < n; ++p) r.holds = r.forward.dims[p] == r.backward.dims[n - 1 - p];
    return r;
}

/// True when lambda^h != 1 for some fundamental-cycle holonomy h, i.e. the
/// local system is nontrivial on some loop.
template <class Scalar, class Value>
bool has_nontrivial_monodromy(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda) {
    for (const auto& h : fundamental_holonomies(K, theta)) {
        if constexpr (is_exact_v<Scalar>) {
            if (edge_weight(lambda, h) != Scalar(1)) return true;
        } else {
            if (std::abs(edge_weight(lambda, h) - Scalar(1)) > 1e-12) return true;
        }
    }
    return false;
}

}  // namespace novikov
