#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novikov/constructions.hpp"
#include "novikov/rank.hpp"

namespace novikov {

/// Matrices H_p of the induced action on H^p(F) for p = 0..fiber_dim.
/// Degrees without cohomology hold explicit 0x0 matrices.
template <class Scalar>
struct FiberCohomologyAction {
    int fiber_dim = 0;
    std::vector<Mat<Scalar>> degrees;

    const Mat<Scalar>& operator[](int p) const { return degrees[static_cast<std::size_t>(p)]; }

    template <class Target>
    FiberCohomologyAction<Target> cast() const {
        FiberCohomologyAction<Target> out{fiber_dim, {}};
        for (const auto& h : degrees) {
            if constexpr (std::is_same_v<Scalar, Rational>) out.degrees.push_back(cast_rational_matrix<Target>(h));
            else out.degrees.push_back(h.template cast<Target>());
        }
        return out;
    }
};

struct WangProfile {
    std::vector<Index> dims;  // degrees 0..fiber_dim+1
    std::int64_t euler = 0;

    friend bool operator==(const WangProfile& a, const WangProfile& b) { return a.dims == b.dims; }
};

/// dims[p] = dim ker(H_p - lambda) + dim coker(H_{p-1} - lambda).
template <class Scalar>
WangProfile wang_dims(const FiberCohomologyAction<Scalar>& action, const Scalar& lambda,
                      RankMode mode = default_rank_mode<Scalar>()) {
    if (is_zero(lambda)) throw Error(ErrorKind::InvalidMonodromy, "lambda must be nonzero");
    if (static_cast<int>(action.degrees.size()) != action.fiber_dim + 1)
        throw Error(ErrorKind::Parameter, "action needs one matrix per degree 0.." + std::to_string(action.fiber_dim));
    std::vector<Index> ker, coker;
    for (const auto& h : action.degrees) {
        if (h.rows() != h.cols()) throw Error(ErrorKind::Parameter, "action matrices must be square");
        Mat<Scalar> shifted = h;
        for (Index i = 0; i < h.rows(); ++i) shifted(i, i) = shifted(i, i) - lambda;
        const Index r = rank(shifted, mode);
        ker.push_back(h.cols() - r);
        coker.push_back(h.rows() - r);
    }
    WangProfile out;
    for (int p = 0; p <= action.fiber_dim + 1; ++p) {
        Index d = 0;
        if (p <= action.fiber_dim) d += ker[static_cast<std::size_t>(p)];
        if (p >= 1) d += coker[static_cast<std::size_t>(p - 1)];
        out.dims.push_back(d);
        out.euler += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d);
    }
    return out;
}

/// Untwisted coboundary C^p -> C^{p+1} over Q.
Mat<Rational> rational_coboundary(const SimplicialComplex& K, int p);

/// Representative cocycles of a basis of H^p(K; Q), chosen as the cocycle
/// columns that are pivots of [im delta_{p-1} | ker delta_p] in column order.
struct CohomologyBasis {
    int degree = 0;
    Mat<Rational> coboundaries;     // columns span B^p
    Mat<Rational> representatives;  // one column per basis class

    Index size() const { return representatives.cols(); }
    /// Coordinates of the class of a cocycle z.
    Vec<Rational> coordinates(const Vec<Rational>& z) const;
};
CohomologyBasis cohomology_basis(const SimplicialComplex& K, int p);

/// f^* c on p-simplices of the source: c(f(sigma)) times the orientation sign,
/// 0 on collapsed simplices.
Vec<Rational> pullback(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f,
                       int p, const Vec<Rational>& cochain);

/// Matrix of phi^* on H^*(K; Q) in the computed bases.
FiberCohomologyAction<Rational> induced_action(const SimplicialComplex& K, const SimplicialMap& phi);

/// (g^*)^{-1} f^* on H^*(fiber; Q), the monodromy of the torus bundle.
FiberCohomologyAction<Rational> induced_action(const TorusBundle& bundle);

}  // namespace novikov
