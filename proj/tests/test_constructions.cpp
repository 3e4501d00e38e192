#include "novikov/constructions.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/twisted.hpp"
#include "novikov/wang.hpp"
#include "support.hpp"

using namespace novikov;
using novikov::test::kind_of;

namespace {

SimplicialMap rotation(int m, int k) {
    SimplicialMap f;
    for (int v = 0; v < m; ++v) f.images.push_back((v + k) % m);
    return f;
}

SimplicialMap reflection(int m) {
    SimplicialMap f;
    for (int v = 0; v < m; ++v) f.images.push_back((m - v) % m);
    return f;
}

// Walks a connected 2-regular graph once around, starting at vertex 0.
std::vector<Vertex> cycle_walk(const SimplicialComplex& K) {
    std::vector<Vertex> loop{0};
    Vertex prev = -1, cur = 0;
    while (true) {
        Vertex next = -1;
        for (const auto& e : K.simplices(1)) {
            Vertex other = e[0] == cur ? e[1] : (e[1] == cur ? e[0] : -1);
            if (other >= 0 && other != prev) {
                next = other;
                break;
            }
        }
        if (next == 0 || next < 0) break;
        loop.push_back(next);
        prev = cur;
        cur = next;
    }
    return loop;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("staircase torus counts") {
    const auto T = product(circle(3), circle(3));
    CHECK(T.count(0) == 9);
    CHECK(T.count(1) == 27);
    CHECK(T.count(2) == 18);
    CHECK(euler_characteristic(T) == 0);
    CHECK(T == staircase_torus(3, {0, 0}).complex);
    const auto G = grid_torus(3);
    CHECK(G.count(1) == 27);
    CHECK(G.count(2) == 18);
}

TEST_CASE("product with a point is the identity") {
    const auto c = circle(4);
    const auto theta = circle_cocycle(c, 2);
    const auto P = product(c, point());
    CHECK(P == c);
    CHECK(combine_cocycles(c, theta, point(), IntegralCocycle::zero(point()), P) == theta);
}

TEST_CASE("combined cocycles are closed and Euler characteristic multiplies") {
    Rng rng(51);
    const auto fx = standard_fixtures();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        for (std::size_t j = i; j < fx.size(); ++j) {
            const auto& K = fx[i].complex;
            const auto& L = fx[j].complex;
            if (K.total_count() * L.total_count() > 6000) continue;
            const auto P = product(K, L);
            CHECK(euler_characteristic(P) == euler_characteristic(K) * euler_characteristic(L));
            const auto theta = combine_cocycles(K, random_cocycle(K, rng), L, random_cocycle(L, rng), P);
            CHECK(validate_closed(P, theta));
        }
    }
}

TEST_CASE("Kunneth convolution on fixture pairs") {
    Rng rng(52);
    const std::vector<std::string> names{"circle3", "circle5", "sphere2"};
    for (const auto& a : names)
        for (const auto& b : names) {
            const auto K = fixture_by_name(a), L = fixture_by_name(b);
            const auto P = product(K.complex, L.complex);
            const auto theta = combine_cocycles(K.complex, K.cocycle, L.complex, L.cocycle, P);
            for (const Rational lambda : {Rational(1), Rational(2), Rational(-1)}) {
                const auto pk = betti_profile(K.complex, K.cocycle, lambda);
                const auto pl = betti_profile(L.complex, L.cocycle, lambda);
                CHECK(kunneth_check(pk, pl, betti_profile(P, theta, lambda)));
            }
        }
}

TEST_CASE("simplicial maps") {
    const auto c = circle(5);
    CHECK(is_automorphism(c, rotation(5, 2)));
    CHECK(is_automorphism(c, reflection(5)));
    CHECK_FALSE(is_automorphism(c, SimplicialMap{{0, 2, 4, 1, 3}}));
    CHECK(inverse_map(rotation(5, 2)).images == rotation(5, 3).images);
    const auto [face, sign] = image_of(SimplicialMap{{1, 0, 2}}, Simplex{0, 1});
    CHECK(face == Simplex{0, 1});
    CHECK(sign == -1);
    CHECK(image_of(SimplicialMap{{0, 0}}, Simplex{0, 1}).second == 0);
    CHECK(is_simplicial(circle(6), circle(3), SimplicialMap{{0, 1, 2, 0, 1, 2}}));
}

TEST_CASE("mapping torus of the identity is a torus") {
    const auto c = circle(3);
    const auto mt = mapping_torus(c, rotation(3, 0));
    CHECK(mt.holonomy_period == 3);
    CHECK(mt.complex.count(0) == 9);
    CHECK(mt.complex.count(1) == 27);
    CHECK(mt.complex.count(2) == 18);
    CHECK(euler_characteristic(mt.complex) == 0);
    CHECK(validate_closed(mt.complex, mt.fiber_cocycle));
    // Same local system as a staircase torus with base holonomy 3.
    const auto t2 = staircase_torus(3, {3, 0});
    for (const Rational lambda : {Rational(1), Rational(2), Rational(-1), Rational(5, 7)})
        CHECK(betti_profile(mt.complex, mt.fiber_cocycle, lambda).dims ==
              betti_profile(t2.complex, t2.cocycle, lambda).dims);
    CHECK(betti_profile(mt.complex, mt.fiber_cocycle, Rational(2)).dims == std::vector<Index>{0, 0, 0});
}

TEST_CASE("mapping tori match the Wang count at lambda^layers") {
    struct Case {
        SimplicialComplex K;
        SimplicialMap phi;
    };
    std::vector<Case> cases{{circle(3), rotation(3, 1)}, {circle(4), reflection(4)}, {circle(5), rotation(5, 2)},
                            {sphere_boundary(2), SimplicialMap{{1, 0, 2, 3}}}};
    const auto t2 = staircase_torus(3, {0, 0}).complex;
    const SimplicialMap swap = torus_grid_map(3, (Eigen::Matrix2i() << 0, 1, 1, 0).finished());
    REQUIRE(is_automorphism(t2, swap));
    cases.push_back({t2, swap});
    for (const auto& [K, phi] : cases) {
        const auto mt = mapping_torus(K, phi);
        CHECK(euler_characteristic(mt.complex) == 0);
        const auto action = induced_action(K, phi);
        for (const Rational lambda : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
            const Rational mu = pow_int(lambda, mt.holonomy_period);
            CHECK(betti_profile(mt.complex, mt.fiber_cocycle, lambda).dims == wang_dims(action, mu).dims);
        }
    }
}

TEST_CASE("infinite-order torus maps are rejected") {
    const auto t2 = staircase_torus(3, {0, 0}).complex;
    for (const auto& A : {(Eigen::Matrix2i() << 1, 1, 0, 1).finished(), (Eigen::Matrix2i() << 2, 1, 1, 1).finished()}) {
        const auto phi = torus_grid_map(3, A);
        CHECK_FALSE(is_automorphism(t2, phi));
        CHECK(kind_of([&] { return mapping_torus(t2, phi); }) == ErrorKind::InvalidMap);
    }
    CHECK(kind_of([] { return torus_grid_map(4, (Eigen::Matrix2i() << 2, 0, 0, 1).finished()); }) ==
          ErrorKind::InvalidMap);
    CHECK(kind_of([] { return mapping_torus(circle(3), rotation(3, 1), 2); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { return mapping_torus(circle(4), SimplicialMap{{0, 2, 1, 3}}); }) == ErrorKind::InvalidMap);
}

TEST_CASE("torus bundles") {
    struct Case {
        Eigen::Matrix2i A;
        std::vector<Index> betti;
    };
    const std::vector<Case> cases{{(Eigen::Matrix2i() << 1, 0, 0, 1).finished(), {1, 3, 3, 1}},
                                  {(Eigen::Matrix2i() << 1, 1, 0, 1).finished(), {1, 2, 2, 1}},
                                  {(Eigen::Matrix2i() << 2, 1, 1, 1).finished(), {1, 1, 1, 1}}};
    for (const auto& [A, betti] : cases) {
        const auto tb = torus_bundle(A, 3);
        CHECK(euler_characteristic(tb.complex) == 0);
        CHECK(validate_closed(tb.complex, tb.fiber_cocycle));
        CHECK(is_simplicial(tb.refined_fiber, tb.fiber, tb.f));
        CHECK(is_simplicial(tb.refined_fiber, tb.fiber, tb.g));
        CHECK(betti_profile(tb.complex, tb.fiber_cocycle, Rational(1)).dims == betti);
    }
    CHECK(kind_of([] { return torus_bundle((Eigen::Matrix2i() << 2, 0, 0, 1).finished()); }) == ErrorKind::InvalidMap);
    CHECK(kind_of([] { return torus_bundle((Eigen::Matrix2i() << 1, -1, 0, 1).finished()); }) == ErrorKind::InvalidMap);
}

TEST_CASE("double cover of the triangle is a hexagon") {
    const auto c = circle(3);
    const auto cov = cyclic_cover(c, circle_cocycle(c, 1), 2);
    CHECK(cov.total.count(0) == 6);
    CHECK(cov.total.count(1) == 6);
    const auto loop = cycle_walk(cov.total);
    CHECK(loop.size() == 6);  // one cycle through all six vertices
    CHECK(std::abs(holonomy(cov.total, cov.pullback, loop)) == 2 * std::abs(holonomy(c, cov.theta, {0, 1, 2})));
    CHECK(is_simplicial(cov.total, c, cov.projection));
}

TEST_CASE("lifted loops wind k times") {
    for (int k = 2; k <= 5; ++k) {
        const auto c = circle(4);
        const auto cov = cyclic_cover(c, circle_cocycle(c, 1), k);
        const auto loop = cycle_walk(cov.total);
        CHECK(loop.size() == static_cast<std::size_t>(4 * k));
        CHECK(std::abs(holonomy(cov.total, cov.pullback, loop)) == k);
    }
}

TEST_CASE("cover counts and dims at lambda = -1") {
    const auto c = circle(3);
    const auto cov = cyclic_cover(c, circle_cocycle(c, 1), 2);
    CHECK(betti_profile(c, cov.theta, Rational(-1)).dims == std::vector<Index>{0, 0});
    CHECK(betti_profile(cov.total, cov.pullback, Rational(-1)).dims == std::vector<Index>{1, 1});

    const auto t2 = staircase_torus(3, {1, 0});
    const auto tc = cyclic_cover(t2.complex, t2.cocycle, 3);
    for (int p = 0; p <= 2; ++p) CHECK(tc.total.count(p) == 3 * t2.complex.count(p));
    CHECK(euler_characteristic(tc.total) == 0);
    const auto base = betti_profile(t2.complex, t2.cocycle, Rational(-1)).dims;
    const auto up = betti_profile(tc.total, tc.pullback, Rational(-1)).dims;
    for (std::size_t p = 0; p < base.size(); ++p) CHECK(base[p] <= up[p]);
}

TEST_CASE("cover errors") {
    const auto c = circle(3);
    CHECK(kind_of([&] { return cyclic_cover(c, RealCocycle::from_edges(c, {{0, 1, 0.5}, {1, 2, 0}, {0, 2, 0}}), 2); }) ==
          ErrorKind::Integrality);
    CHECK(cyclic_cover(c, RealCocycle::from_edges(c, {{0, 1, 1.0}, {1, 2, 0}, {0, 2, 0}}), 2).total.count(0) == 6);
    CHECK(kind_of([&] { return cyclic_cover(c, circle_cocycle(c, 1), 1); }) == ErrorKind::Parameter);
}

}  // TEST_SUITE
