#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "novikov/cocycle.hpp"
#include "novikov/simplicial_complex.hpp"

namespace novikov {

/// Staircase triangulation of K x L. Vertex (a, b) gets id a * |V(L)| + b;
/// simplices are the chains of the product order whose projections are
/// simplices of K and L.
SimplicialComplex product(const SimplicialComplex& K, const SimplicialComplex& L);

/// Pullback sum pi_K^* theta + pi_L^* gamma on product(K, L).
template <class Value>
OneCocycle<Value> combine_cocycles(const SimplicialComplex& K, const OneCocycle<Value>& theta,
                                   const SimplicialComplex& L, const OneCocycle<Value>& gamma,
                                   const SimplicialComplex& KxL) {
    require_defined(K, theta);
    require_defined(L, gamma);
    const auto nL = static_cast<Vertex>(L.vertex_count());
    std::vector<Value> values;
    values.reserve(static_cast<std::size_t>(KxL.count(1)));
    for (const auto& e : KxL.simplices(1)) {
        const Vertex a0 = e[0] / nL, b0 = e[0] % nL, a1 = e[1] / nL, b1 = e[1] % nL;
        values.push_back(*step_value(K, theta, a0, a1) + *step_value(L, gamma, b0, b1));
    }
    return OneCocycle<Value>(std::move(values));
}

/// circle(m)^dim via repeated staircase products, with the cocycle whose
/// holonomy around the i-th factor loop 0 -> 1 -> ... -> 0 is holonomies[i].
struct StaircaseTorus {
    SimplicialComplex complex;
    IntegralCocycle cocycle;
};
StaircaseTorus staircase_torus(int m, const std::vector<std::int64_t>& holonomies);

/// Cocycle on circle(m) with the given holonomy, concentrated on edge (0,1).
IntegralCocycle circle_cocycle(const SimplicialComplex& circle_complex, std::int64_t holonomy);

/// Vertex map between complexes.
struct SimplicialMap {
    std::vector<Vertex> images;

    Vertex operator()(Vertex v) const { return images[static_cast<std::size_t>(v)]; }
};

/// Image of a simplex as a sorted vertex set (duplicates removed) and the sign
/// of the sorting permutation, 0 if the image is degenerate.
std::pair<Simplex, int> image_of(const SimplicialMap& f, const Simplex& s);

/// Sends every simplex of `source` onto a simplex of `target` (possibly of lower dimension).
bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f);
bool is_automorphism(const SimplicialComplex& K, const SimplicialMap& phi);
SimplicialMap inverse_map(const SimplicialMap& phi);

/// Integer matrix acting on the vertex grid of circle(m) x circle(m) (vertex
/// (i, j) has id i*m + j). Rejects matrices that are not bijective mod m.
SimplicialMap torus_grid_map(int m, const Eigen::Matrix2i& A);

struct MappingTorus {
    SimplicialComplex complex;
    /// Integral closed cocycle dual to the fiber; base-loop holonomy holonomy_period.
    IntegralCocycle fiber_cocycle;
    std::int64_t holonomy_period = 0;
    std::string recipe;
};

/// K x [0, layers] with (phi(x), layers) identified to (x, 0). The fiber
/// cocycle is the layer difference of each edge, so the base loop has
/// holonomy `layers`. With this orientation the twisted cohomology at lambda
/// is governed by phi^* at lambda^layers.
MappingTorus mapping_torus(const SimplicialComplex& K, const SimplicialMap& phi, int layers = 3);

/// Translation-invariant triangulation of the m x m torus grid: triangles
/// (x, x+e1, x+e1+e2) and (x, x+e2, x+e1+e2), vertex (i, j) with id i*m + j.
/// Same counts as the staircase torus but without the seam at the wrap.
SimplicialComplex grid_torus(int m);
/// Its triangles as geometric chains, in the vertex order above.
std::vector<Simplex> grid_torus_chains(int m);

/// Torus bundle over the circle with monodromy A in GL(2, Z) (nonnegative
/// entries). Finite-order automorphisms are the only ones a finite
/// triangulation admits, so the bundle is the homotopy coequalizer of two
/// simplicial maps f, g from a refined grid torus X = T(s*m) onto Y = T(m):
/// g(x) = floor(x / s) and f(x) = floor(A x / s). It is triangulated as
/// Cyl(f) on X_0, the prism X x [0,1], and Cyl(g) on X_1, glued along Y.
/// Both maps are monotone along the geometric chains, which is what makes
/// the simplicial mapping cylinders retract onto Y.
/// The cocycle is +1 on edges crossing Cyl(g) from X_1 into Y, so the base
/// loop has holonomy 1 and the fiber action is (g^*)^{-1} f^* on H^*(Y).
struct TorusBundle {
    SimplicialComplex complex;
    IntegralCocycle fiber_cocycle;
    std::int64_t holonomy_period = 1;
    SimplicialComplex fiber;         // Y
    SimplicialComplex refined_fiber;  // X
    SimplicialMap f;                 // X -> Y, approximates A
    SimplicialMap g;                 // X -> Y, approximates the identity
    Eigen::Matrix2i monodromy;
    int grid = 0;
    int refinement = 0;
    std::string recipe;
};
TorusBundle torus_bundle(const Eigen::Matrix2i& A, int m = 3);

struct CoveringData {
    SimplicialComplex base;
    IntegralCocycle theta;
    int sheets = 0;
    SimplicialComplex total;
    SimplicialMap projection;  // total -> base
    IntegralCocycle pullback;
};

/// k-sheeted cyclic cover classified by theta mod k. Vertex (v, r) has id v*k + r.
CoveringData cyclic_cover(const SimplicialComplex& K, const IntegralCocycle& theta, int k);
/// Same, for a real cocycle that must take integer values.
CoveringData cyclic_cover(const SimplicialComplex& K, const RealCocycle& theta, int k);

}  // namespace novikov
