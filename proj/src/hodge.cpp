#include "novikov/hodge.hpp"

#include <cmath>

namespace novikov {

InnerProduct InnerProduct::unit(const SimplicialComplex& K) {
    InnerProduct ip;
    for (int p = 0; p <= K.dimension(); ++p) ip.weights_.push_back(Eigen::VectorXd::Ones(K.count(p)));
    return ip;
}

InnerProduct InnerProduct::from_degrees(const SimplicialComplex& K, const std::vector<std::vector<double>>& weights) {
    if (static_cast<int>(weights.size()) > K.dimension() + 1)
        throw Error(ErrorKind::Weight, "weights given for degrees above dim K");
    InnerProduct ip = unit(K);
    for (std::size_t p = 0; p < weights.size(); ++p) {
        if (weights[p].empty()) continue;
        if (static_cast<Index>(weights[p].size()) != K.count(static_cast<int>(p)))
            throw Error(ErrorKind::Weight, "degree " + std::to_string(p) + " needs " +
                                               std::to_string(K.count(static_cast<int>(p))) + " weights");
        for (std::size_t i = 0; i < weights[p].size(); ++i) {
            const double v = weights[p][i];
            if (!(v > 0.0) || !std::isfinite(v))
                throw Error(ErrorKind::Weight, "weights must be positive and finite");
            ip.weights_[p](static_cast<Index>(i)) = v;
        }
    }
    return ip;
}

InnerProduct InnerProduct::scaled(double c) const {
    if (!(c > 0.0)) throw Error(ErrorKind::Weight, "scale factor must be positive");
    InnerProduct ip = *this;
    for (auto& w : ip.weights_) w *= c;
    return ip;
}

namespace {

// Real potential f minimizing the weighted norm of theta + delta f.
Eigen::VectorXd least_squares_potential(const SimplicialComplex& K, const RealCocycle& theta, const InnerProduct& w) {
    const auto& edges = K.simplices(1);
    const Index ne = K.count(1), nv = K.vertex_count();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(ne, nv);
    Eigen::VectorXd t(ne);
    const Eigen::VectorXd s = w[1].cwiseSqrt();
    for (Index e = 0; e < ne; ++e) {
        D(e, edges[static_cast<std::size_t>(e)][0]) = -s(e);
        D(e, edges[static_cast<std::size_t>(e)][1]) = s(e);
        t(e) = s(e) * theta[e];
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(D);
    return cod.solve(-t);
}

}  // namespace

RealCocycle harmonic_representative(const SimplicialComplex& K, const RealCocycle& theta, const InnerProduct& w) {
    require_closed(K, theta);
    if (K.count(1) == 0) return theta;
    const Eigen::VectorXd f = least_squares_potential(K, theta, w);
    return gauge_transform(K, theta, ZeroCochain<double>(f.data(), f.data() + f.size()));
}

IntegralCocycle conditioned_gauge(const SimplicialComplex& K, const IntegralCocycle& theta) {
    require_closed(K, theta);
    if (K.count(1) == 0) return theta;
    const Eigen::VectorXd f = least_squares_potential(K, theta.cast<double>(), InnerProduct::unit(K));
    ZeroCochain<std::int64_t> g(static_cast<std::size_t>(f.size()));
    for (Index v = 0; v < f.size(); ++v) g[static_cast<std::size_t>(v)] = std::llround(f(v));
    return gauge_transform(K, theta, g);
}

Normalization novikov_normalize(const SimplicialComplex& K, const RealCocycle& theta_h, const InnerProduct& w) {
    require_defined(K, theta_h);
    Normalization out;
    if (K.is_pure() && K.dimension() >= 0) {
        out.volume = w[K.dimension()].sum();
        out.volume_convention = "top-simplex-weight";
    } else {
        out.volume = w[0].sum();
        out.volume_convention = "vertex-weight";
    }
    for (Index e = 0; e < theta_h.size(); ++e) out.norm2 += w[1](e) * theta_h[e] * theta_h[e];
    if (!(out.norm2 > 0.0)) throw Error(ErrorKind::Normalization, "cannot normalize the zero cocycle");
    out.t = std::sqrt(out.volume / out.norm2);
    return out;
}

}  // namespace novikov
