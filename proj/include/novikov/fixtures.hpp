#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "novikov/constructions.hpp"

namespace novikov {

/// Every randomized routine takes one of these, seeded explicitly.
using Rng = std::mt19937_64;

/// Integer basis of the closed integral 1-cochains Z^1(K; Z) (columns over Q,
/// each scaled to a primitive integer vector).
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> integral_cocycle_basis(const SimplicialComplex& K);

/// Random integer combination of the basis, coefficients in [-range, range].
IntegralCocycle random_cocycle(const SimplicialComplex& K, Rng& rng, int range = 3);
/// Same, resampled until some loop has nonzero holonomy. Throws Parameter
/// when H^1(K) = 0.
IntegralCocycle random_nonexact_cocycle(const SimplicialComplex& K, Rng& rng, int range = 3);
/// Random vertex potential with values in [-range, range].
ZeroCochain<std::int64_t> random_potential(const SimplicialComplex& K, Rng& rng, int range = 5);
/// Random nonzero rational p/q with |p|, q <= bound.
Rational random_lambda(Rng& rng, int bound = 7);

/// Random complex: 4..max_vertices vertices, a handful of random maximal
/// simplices of dimension <= 3, at most max_simplices simplices in total.
SimplicialComplex random_complex(Rng& rng, int max_vertices = 9, Index max_simplices = 200);

struct Fixture {
    std::string name;
    SimplicialComplex complex;
    IntegralCocycle cocycle;
    bool closed_manifold = false;
};

/// The standard named fixtures: circle3, circle5, sphere2, torus2, torus3,
/// torus2_11 (holonomies (1,1)), mapping_torus_circle.
std::vector<Fixture> standard_fixtures();
Fixture fixture_by_name(const std::string& name);

}  // namespace novikov
