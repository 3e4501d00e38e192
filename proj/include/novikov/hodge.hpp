#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <string>
#include <vector>

#include "novikov/twisted.hpp"

namespace novikov {

inline constexpr double kHarmonicThreshold = 1e-8;

/// Diagonal inner product on cochains: one positive weight per p-simplex.
class InnerProduct {
public:
    /// All weights 1.
    static InnerProduct unit(const SimplicialComplex& K);
    /// Degrees not listed in `weights` default to 1. Throws Weight on a wrong
    /// length or a non-positive entry.
    static InnerProduct from_degrees(const SimplicialComplex& K, const std::vector<std::vector<double>>& weights);

    const Eigen::VectorXd& operator[](int p) const { return weights_[static_cast<std::size_t>(p)]; }
    int max_degree() const { return static_cast<int>(weights_.size()) - 1; }
    InnerProduct scaled(double c) const;

private:
    std::vector<Eigen::VectorXd> weights_;
};

/// <x, y>_p = sum_sigma w(sigma) conj(x) y.
template <class Scalar>
Scalar weighted_dot(const InnerProduct& w, int p, const Vec<Scalar>& x, const Vec<Scalar>& y) {
    return x.dot(w[p].cast<Scalar>().asDiagonal() * y);
}

/// W_p^{-1} delta_p^H W_{p+1}: maps (p+1)-cochains to p-cochains.
template <class Scalar, class Value>
Mat<Scalar> adjoint(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                    const InnerProduct& w, int p) {
    static_assert(is_float_v<Scalar>, "Hodge theory runs on the floating backend");
    const Mat<Scalar> d = twisted_coboundary(K, theta, lambda, p);
    const Eigen::VectorXd inv = w[p].cwiseInverse();
    return inv.cast<Scalar>().asDiagonal() * d.adjoint() * w[p + 1].cast<Scalar>().asDiagonal();
}

/// delta*_p delta_p + delta_{p-1} delta*_{p-1} on p-cochains.
template <class Scalar, class Value>
Mat<Scalar> laplacian(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                      const InnerProduct& w, int p) {
    static_assert(is_float_v<Scalar>, "Hodge theory runs on the floating backend");
    if (p < 0 || p > K.dimension()) throw Error(ErrorKind::Degree, "Laplacian degree " + std::to_string(p) + " out of range");
    Mat<Scalar> L = Mat<Scalar>::Zero(K.count(p), K.count(p));
    if (p < K.dimension()) L += adjoint(K, theta, lambda, w, p) * twisted_coboundary(K, theta, lambda, p);
    if (p > 0) L += twisted_coboundary(K, theta, lambda, p - 1) * adjoint(K, theta, lambda, w, p - 1);
    return L;
}

struct HarmonicSpectrum {
    Index dim = 0;
    double largest = 0.0;
    double cut = 0.0;
    double spectral_gap = 0.0;  // smallest eigenvalue above the cut, 0 if none
    double smallest = 0.0;
};

namespace detail {

/// Eigen-decomposition of W^{1/2} L W^{-1/2}, which is Hermitian when L is
/// self-adjoint in the weighted inner product.
template <class Scalar>
Eigen::SelfAdjointEigenSolver<Mat<Scalar>> symmetric_spectrum(const Mat<Scalar>& L, const Eigen::VectorXd& w) {
    const Eigen::VectorXd s = w.cwiseSqrt();
    Mat<Scalar> S = s.cast<Scalar>().asDiagonal() * L * s.cwiseInverse().cast<Scalar>().asDiagonal();
    S = (S + S.adjoint()).eval() / Scalar(2);
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> solver(S);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::Numerical, "eigen-solver did not converge");
    return solver;
}

inline HarmonicSpectrum classify(const Eigen::VectorXd& eig, double threshold) {
    HarmonicSpectrum out;
    if (eig.size() == 0) return out;
    out.largest = eig.cwiseAbs().maxCoeff();
    out.smallest = eig.minCoeff();
    out.cut = threshold * out.largest;
    for (Index i = 0; i < eig.size(); ++i) {
        if (eig(i) <= out.cut) ++out.dim;
        else if (out.spectral_gap == 0.0 || eig(i) < out.spectral_gap) out.spectral_gap = eig(i);
    }
    return out;
}

}  // namespace detail

template <class Scalar, class Value>
HarmonicSpectrum harmonic_spectrum(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                                   const InnerProduct& w, int p, double threshold = kHarmonicThreshold) {
    const Mat<Scalar> L = laplacian(K, theta, lambda, w, p);
    if (L.size() == 0) return {};
    auto solver = detail::symmetric_spectrum(L, w[p]);
    return detail::classify(solver.eigenvalues(), threshold);
}

template <class Scalar, class Value>
Index harmonic_dim(const SimplicialComplex& K, const OneCocycle<Value>& theta, const Scalar& lambda,
                   const InnerProduct& w, int p, double threshold = kHarmonicThreshold) {
    return harmonic_spectrum(K, theta, lambda, w, p, threshold).dim;
}

template <class Scalar>
struct HodgeDecomposition {
    Vec<Scalar> harmonic;
    Vec<Scalar> exact;    // in the image of delta_{p-1}
    Vec<Scalar> coexact;  // in the image of delta*_p
    double residual = 0.0;  // |x - sum| / |x|, weighted norms
    double max_overlap = 0.0;  // largest |<a,b>| / (|a||b|) over component pairs
};

namespace detail {

/// Weighted orthogonal projection of x onto the column span of A.
template <class Scalar>
Vec<Scalar> project_onto(const Mat<Scalar>& A, const Eigen::VectorXd& w, const Vec<Scalar>& x) {
    if (A.cols() == 0 || A.rows() == 0) return Vec<Scalar>::Zero(x.size());
    const Eigen::VectorXd s = w.cwiseSqrt();
    const Mat<Scalar> As = s.cast<Scalar>().asDiagonal() * A;
    const Vec<Scalar> xs = s.cast<Scalar>().asDiagonal() * x;
    Eigen::CompleteOrthogonalDecomposition<Mat<Scalar>> cod(As);
    cod.setThreshold(1e-12);
    const Vec<Scalar> coeffs = cod.solve(xs);
    return A * coeffs;
}

template <class Scalar>
double weighted_norm(const Eigen::VectorXd& w, const Vec<Scalar>& x) {
    return std::sqrt(std::abs(x.dot(w.cast<Scalar>().asDiagonal() * x)));
}

}  // namespace detail

template <class Scalar, class Value>
HodgeDecomposition<Scalar> hodge_decompose(const SimplicialComplex& K, const OneCocycle<Value>& theta,
                                           const Scalar& lambda, const InnerProduct& w, int p,
                                           const Vec<Scalar>& cochain, double threshold = kHarmonicThreshold) {
    if (cochain.size() != K.count(p)) throw Error(ErrorKind::Parameter, "cochain length does not match degree");
    HodgeDecomposition<Scalar> out;
    const Mat<Scalar> L = laplacian(K, theta, lambda, w, p);
    auto solver = detail::symmetric_spectrum(L, w[p]);
    const HarmonicSpectrum spec = detail::classify(solver.eigenvalues(), threshold);
    const Eigen::VectorXd s = w[p].cwiseSqrt();
    // Eigenvalues come sorted ascending, so the harmonic block is a prefix.
    const Mat<Scalar> U = solver.eigenvectors().leftCols(spec.dim);
    const Vec<Scalar> xs = s.cast<Scalar>().asDiagonal() * cochain;
    out.harmonic = s.cwiseInverse().cast<Scalar>().asDiagonal() * (U * (U.adjoint() * xs));
    out.exact = p > 0 ? detail::project_onto(Mat<Scalar>(twisted_coboundary(K, theta, lambda, p - 1)), w[p], cochain)
                      : Vec<Scalar>::Zero(cochain.size());
    out.coexact = p < K.dimension() ? detail::project_onto(Mat<Scalar>(adjoint(K, theta, lambda, w, p)), w[p], cochain)
                                    : Vec<Scalar>::Zero(cochain.size());
    const double norm = detail::weighted_norm(w[p], cochain);
    const Vec<Scalar> rest = cochain - out.harmonic - out.exact - out.coexact;
    out.residual = norm > 0.0 ? detail::weighted_norm(w[p], rest) / norm : detail::weighted_norm(w[p], rest);
    const std::vector<const Vec<Scalar>*> parts{&out.harmonic, &out.exact, &out.coexact};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const double a = detail::weighted_norm(w[p], *parts[i]), b = detail::weighted_norm(w[p], *parts[j]);
            if (a == 0.0 || b == 0.0) continue;
            out.max_overlap = std::max(out.max_overlap, std::abs(weighted_dot(w, p, *parts[i], *parts[j])) / (a * b));
        }
    return out;
}

/// theta + delta f with f minimizing the weighted edge norm; the result is
/// weighted-coexact (discrete d* theta = 0) and has the same holonomies.
RealCocycle harmonic_representative(const SimplicialComplex& K, const RealCocycle& theta, const InnerProduct& w);

/// Cohomologous integral cocycle: theta plus the coboundary of the rounded
/// least-squares potential. Edge values stay close to the harmonic
/// representative, so lambda^theta weights (and Laplacian spectra) stay tame.
/// Twisted dims are unchanged; Laplacians and harmonic forms are not.
IntegralCocycle conditioned_gauge(const SimplicialComplex& K, const IntegralCocycle& theta);

struct Normalization {
    double t = 0.0;
    double volume = 0.0;
    double norm2 = 0.0;
    /// "top-simplex-weight" when K is pure, else "vertex-weight".
    std::string volume_convention;
};

/// t = (V / |theta_h|^2)^{1/2}, so t * theta_h has mean square 1 per unit volume.
Normalization novikov_normalize(const SimplicialComplex& K, const RealCocycle& theta_h, const InnerProduct& w);

}  // namespace novikov
