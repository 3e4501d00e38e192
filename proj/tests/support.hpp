#pragma once

#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "novikov/rank.hpp"
#include "novikov/simplicial_complex.hpp"

namespace novikov::test {

inline Mat<Rational> to_rational(const Eigen::MatrixXi& m) {
    Mat<Rational> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

/// Ordinary Betti numbers from boundary ranks alone, independent of the
/// twisted code path.
inline std::vector<Index> untwisted_betti(const SimplicialComplex& K) {
    const int n = K.dimension();
    std::vector<Index> rk(static_cast<std::size_t>(n + 2), 0);
    for (int p = 1; p <= n; ++p) rk[static_cast<std::size_t>(p)] = rank(to_rational(boundary_matrix(K, p)));
    std::vector<Index> b;
    for (int p = 0; p <= n; ++p) b.push_back(K.count(p) - rk[static_cast<std::size_t>(p)] - rk[static_cast<std::size_t>(p + 1)]);
    return b;
}

inline FieldContext field(const char* minpoly) {
    return std::make_shared<const MinimalPolynomial>(MinimalPolynomial::parse(minpoly));
}

template <class E>
ErrorKind kind_of(E&& call) {
    try {
        call();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a novikov::Error");
    return ErrorKind::Usage;
}

}  // namespace novikov::test
