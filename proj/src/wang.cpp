#include "novikov/wang.hpp"

namespace novikov {

Mat<Rational> rational_coboundary(const SimplicialComplex& K, int p) {
    Mat<Rational> d = Mat<Rational>::Zero(K.count(p + 1), K.count(p));
    if (p + 1 > K.dimension() || p < 0) return d;
    const Eigen::MatrixXi b = boundary_matrix(K, p + 1);
    for (Index i = 0; i < b.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) d(j, i) = Rational(b(i, j));
    return d;
}

CohomologyBasis cohomology_basis(const SimplicialComplex& K, int p) {
    CohomologyBasis out;
    out.degree = p;
    const Index n = K.count(p);
    out.coboundaries = p > 0 ? rational_coboundary(K, p - 1) : Mat<Rational>(n, 0);
    const Mat<Rational> cocycles = nullspace(rational_coboundary(K, p));
    Mat<Rational> joined(n, out.coboundaries.cols() + cocycles.cols());
    joined << out.coboundaries, cocycles;
    // Row echelon of the transpose would lose column order; pivots of the
    // RREF of `joined` are exactly its first linearly independent columns.
    const auto rref = reduced_row_echelon(joined);
    std::vector<Index> chosen;
    for (Index c : rref.pivots)
        if (c >= out.coboundaries.cols()) chosen.push_back(c - out.coboundaries.cols());
    out.representatives.resize(n, static_cast<Index>(chosen.size()));
    for (std::size_t k = 0; k < chosen.size(); ++k) out.representatives.col(static_cast<Index>(k)) = cocycles.col(chosen[k]);
    return out;
}

Vec<Rational> CohomologyBasis::coordinates(const Vec<Rational>& z) const {
    Mat<Rational> system(representatives.rows(), representatives.cols() + coboundaries.cols());
    system << representatives, coboundaries;
    auto x = solve_exact(system, z);
    if (!x) throw Error(ErrorKind::Cocycle, "cochain is not a cocycle in degree " + std::to_string(degree));
    return x->head(representatives.cols());
}

Vec<Rational> pullback(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f,
                       int p, const Vec<Rational>& cochain) {
    Vec<Rational> out = Vec<Rational>::Zero(source.count(p));
    const auto& simplices = source.simplices(p);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        auto [img, sign] = image_of(f, simplices[i]);
        if (sign == 0) continue;
        auto idx = target.find(img);
        if (!idx) throw Error(ErrorKind::InvalidMap, "image of a simplex is not a simplex");
        out(static_cast<Index>(i)) = sign > 0 ? cochain(*idx) : -cochain(*idx);
    }
    return out;
}

namespace {

Mat<Rational> pullback_matrix(const SimplicialComplex& source, const CohomologyBasis& source_basis,
                              const SimplicialComplex& target, const CohomologyBasis& target_basis,
                              const SimplicialMap& f, int p) {
    Mat<Rational> m(source_basis.size(), target_basis.size());
    for (Index j = 0; j < target_basis.size(); ++j) {
        Vec<Rational> rep = target_basis.representatives.col(j);
        m.col(j) = source_basis.coordinates(pullback(source, target, f, p, rep));
    }
    return m;
}

}  // namespace

FiberCohomologyAction<Rational> induced_action(const SimplicialComplex& K, const SimplicialMap& phi) {
    if (!is_automorphism(K, phi)) throw Error(ErrorKind::InvalidMap, "vertex map is not a simplicial automorphism");
    FiberCohomologyAction<Rational> out;
    out.fiber_dim = K.dimension();
    for (int p = 0; p <= K.dimension(); ++p) {
        const CohomologyBasis basis = cohomology_basis(K, p);
        out.degrees.push_back(pullback_matrix(K, basis, K, basis, phi, p));
    }
    return out;
}

FiberCohomologyAction<Rational> induced_action(const TorusBundle& bundle) {
    const SimplicialComplex& X = bundle.refined_fiber;
    const SimplicialComplex& Y = bundle.fiber;
    FiberCohomologyAction<Rational> out;
    out.fiber_dim = Y.dimension();
    for (int p = 0; p <= Y.dimension(); ++p) {
        const CohomologyBasis bx = cohomology_basis(X, p), by = cohomology_basis(Y, p);
        const Mat<Rational> F = pullback_matrix(X, bx, Y, by, bundle.f, p);
        const Mat<Rational> G = pullback_matrix(X, bx, Y, by, bundle.g, p);
        // G is invertible (g is homotopic to a homeomorphism); solve G H = F column by column.
        Mat<Rational> H(G.cols(), F.cols());
        for (Index j = 0; j < F.cols(); ++j) {
            Vec<Rational> rhs = F.col(j);
            auto x = solve_exact(G, rhs);
            if (!x || rank(G) != G.cols()) throw Error(ErrorKind::Construction, "refinement map is not a cohomology isomorphism");
            H.col(j) = *x;
        }
        out.degrees.push_back(std::move(H));
    }
    return out;
}

}  // namespace novikov
