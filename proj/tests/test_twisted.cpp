#include <numbers>

#include "novikov/constructions.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/twisted.hpp"
#include "support.hpp"

using namespace novikov;
using novikov::test::field;
using novikov::test::kind_of;
using novikov::test::untwisted_betti;

namespace {

IntegralCocycle circle_theta(std::int64_t h = 1) { return circle_cocycle(circle(3), h); }

template <class S>
bool delta_squared_zero(const SimplicialComplex& K, const IntegralCocycle& theta, const S& lambda) {
    for (int p = 0; p + 1 < K.dimension(); ++p) {
        const Mat<S> dd = twisted_coboundary(K, theta, lambda, p + 1) * twisted_coboundary(K, theta, lambda, p);
        if constexpr (is_exact_v<S>) {
            for (Index i = 0; i < dd.size(); ++i)
                if (!dd.data()[i].is_zero()) return false;
        } else {
            const double scale = twisted_coboundary(K, theta, lambda, p).cwiseAbs().maxCoeff();
            if (dd.cwiseAbs().maxCoeff() > 1e-12 * scale * scale) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("twisted") {

TEST_CASE("circle coboundary rows are lambda f1 - f0, f2 - f1, f2 - f0") {
    const auto K = circle(3);
    const Rational lambda(3);
    const Mat<Rational> d = twisted_coboundary(K, circle_theta(), lambda, 0);
    const Index e01 = K.index_of({0, 1}), e12 = K.index_of({1, 2}), e02 = K.index_of({0, 2});
    CHECK(d(e01, 0) == Rational(-1));
    CHECK(d(e01, 1) == lambda);
    CHECK(d(e01, 2) == Rational(0));
    CHECK(d(e12, 1) == Rational(-1));
    CHECK(d(e12, 2) == Rational(1));
    CHECK(d(e02, 0) == Rational(-1));
    CHECK(d(e02, 2) == Rational(1));
    CHECK(twisted_coboundary(K, circle_theta(), lambda, 1).rows() == 0);
}

TEST_CASE("circle at lambda 3 vanishes; determinant oracle") {
    // det [[-1, l, 0], [0, -1, 1], [-1, 0, 1]] = 1 - l by cofactor expansion.
    const double l = 3.0;
    const double det = -1.0 * (-1.0 * 1.0 - 1.0 * 0.0) - l * (0.0 * 1.0 - 1.0 * -1.0);
    CHECK(det == doctest::Approx(1.0 - l));
    CHECK(det != 0.0);
    CHECK(betti_profile(circle(3), circle_theta(), Rational(3)).dims == std::vector<Index>{0, 0});
}

TEST_CASE("lambda 1 gives the untwisted coboundary") {
    for (const auto& fx : standard_fixtures()) {
        const auto& K = fx.complex;
        for (int p = 0; p < K.dimension(); ++p) {
            const Mat<Rational> d = twisted_coboundary(K, fx.cocycle, Rational(1), p);
            const Mat<Rational> plain = test::to_rational(boundary_matrix(K, p + 1).transpose());
            CHECK(d == plain);
        }
        CHECK(betti_profile(K, fx.cocycle, Rational(1)).dims == untwisted_betti(K));
    }
}

TEST_CASE("delta squared vanishes in every backend") {
    Rng rng(31);
    const auto ctx = field("x^2-3*x+1");
    for (const auto& fx : standard_fixtures()) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto theta = random_cocycle(fx.complex, rng);
            CHECK(delta_squared_zero(fx.complex, theta, random_lambda(rng)));
            CHECK(delta_squared_zero(fx.complex, theta, NumberFieldElement::generator(ctx)));
            CHECK(delta_squared_zero(fx.complex, theta, 1.7));
            CHECK(delta_squared_zero(fx.complex, theta, ComplexFloat(0.3, -1.1)));
        }
    }
    for (int i = 0; i < 20; ++i) {
        const auto K = random_complex(rng);
        CHECK(delta_squared_zero(K, random_cocycle(K, rng), random_lambda(rng)));
    }
    // full triangle
    const auto T = SimplicialComplex::build({{0, 1, 2}});
    CHECK(delta_squared_zero(T, IntegralCocycle::from_edges(T, {{0, 1, 2}, {1, 2, -5}, {0, 2, -3}}), Rational(7, 2)));
}

TEST_CASE("torus examples") {
    const auto t2 = staircase_torus(3, {1, 0});
    CHECK(betti_profile(t2.complex, t2.cocycle, Rational(2)).dims == std::vector<Index>{0, 0, 0});
    CHECK(betti_profile(t2.complex, t2.cocycle, Rational(1)).dims == std::vector<Index>{1, 2, 1});
    const auto t3 = staircase_torus(3, {1, 0, 0});
    CHECK(betti_profile(t3.complex, t3.cocycle, Rational(2)).dims == std::vector<Index>{0, 0, 0, 0});
}

TEST_CASE("profile bookkeeping") {
    const auto t2 = staircase_torus(3, {1, 0});
    const auto prof = betti_profile(t2.complex, t2.cocycle, 2.0, RankMode::Float(1e-10));
    CHECK(prof.backend == Backend::Float);
    REQUIRE(prof.tolerance);
    CHECK(*prof.tolerance == 1e-10);
    for (int p = 0; p <= 2; ++p) CHECK(prof.dims[static_cast<std::size_t>(p)] <= t2.complex.count(p));
    CHECK(prof.euler == 0);
}

TEST_CASE("duality examples") {
    const auto t2 = staircase_torus(3, {1, 0});
    auto r = duality_check(t2.complex, t2.cocycle, Rational(5, 7));
    CHECK(r.holds);
    CHECK(r.forward.dims == std::vector<Index>{0, 0, 0});
    r = duality_check(t2.complex, t2.cocycle, Rational(1));
    CHECK(r.holds);
    CHECK(r.forward.dims == std::vector<Index>{1, 2, 1});
    const auto t3 = staircase_torus(3, {1, 0, 0});
    r = duality_check(t3.complex, t3.cocycle, Rational(2));
    CHECK(r.holds);
    CHECK(r.forward.dims == std::vector<Index>{0, 0, 0, 0});
}

TEST_CASE("Kunneth examples") {
    const auto c = circle(3);
    const auto a = betti_profile(c, circle_theta(1), Rational(2));
    const auto b = betti_profile(c, IntegralCocycle::zero(c), Rational(2));
    CHECK(a.dims == std::vector<Index>{0, 0});
    CHECK(b.dims == std::vector<Index>{1, 1});
    const auto P = product(c, c);
    const auto theta = combine_cocycles(c, circle_theta(1), c, IntegralCocycle::zero(c), P);
    const auto pp = betti_profile(P, theta, Rational(2));
    CHECK(pp.dims == std::vector<Index>{0, 0, 0});
    CHECK(kunneth_check(a, b, pp));

    const auto one = betti_profile(c, IntegralCocycle::zero(c), Rational(1));
    const auto t2 = betti_profile(P, IntegralCocycle::zero(P), Rational(1));
    CHECK(kunneth_check(one, one, t2));
    CHECK(convolve({1, 1}, {1, 1}) == std::vector<Index>{1, 2, 1});

    const auto pt = point();
    const auto ptp = betti_profile(pt, IntegralCocycle::zero(pt), Rational(2));
    const auto Kp = product(c, pt);
    CHECK(kunneth_check(a, ptp, betti_profile(Kp, combine_cocycles(c, circle_theta(1), pt, IntegralCocycle::zero(pt), Kp), Rational(2))));
}

TEST_CASE("Euler invariance over random complexes, cocycles and lambdas") {
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        const auto K = random_complex(rng);
        const auto theta = random_cocycle(K, rng);
        CHECK(betti_profile(K, theta, random_lambda(rng)).euler == euler_characteristic(K));
    }
}

TEST_CASE("gauge invariance of dims") {
    Rng rng(43);
    for (const auto& fx : standard_fixtures()) {
        for (int trial = 0; trial < 3; ++trial) {
            const Rational lambda = random_lambda(rng);
            const auto moved = gauge_transform(fx.complex, fx.cocycle, random_potential(fx.complex, rng));
            CHECK(betti_profile(fx.complex, moved, lambda).dims == betti_profile(fx.complex, fx.cocycle, lambda).dims);
        }
    }
}

TEST_CASE("extremal degrees vanish for a nontrivial local system on closed manifolds") {
    for (const auto& fx : standard_fixtures()) {
        if (!fx.closed_manifold) continue;
        for (const Rational lambda : {Rational(2), Rational(5, 7), Rational(-1)}) {
            if (!has_nontrivial_monodromy(fx.complex, fx.cocycle, lambda)) continue;
            const auto d = betti_profile(fx.complex, fx.cocycle, lambda).dims;
            CHECK(d.front() == 0);
            CHECK(d.back() == 0);
        }
    }
}

TEST_CASE("number field and complex lambdas") {
    const auto t2 = staircase_torus(3, {1, 0});
    const auto sqrt2 = NumberFieldElement::generator(field("x^2-2"));
    CHECK(betti_profile(t2.complex, t2.cocycle, sqrt2).dims == std::vector<Index>{0, 0, 0});
    CHECK(betti_profile(t2.complex, t2.cocycle, sqrt2).backend == Backend::NumberField);

    // A primitive cube root of unity: trivial on holonomy 3, nontrivial on holonomy 1.
    const ComplexFloat w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const auto c = circle(3);
    CHECK(betti_profile(c, circle_theta(3), w, RankMode::Float()).dims == std::vector<Index>{1, 1});
    CHECK(betti_profile(c, circle_theta(1), w, RankMode::Float()).dims == std::vector<Index>{0, 0});
    // Same statement in Q[x]/(x^2+x+1).
    const auto z = NumberFieldElement::generator(field("x^2+x+1"));
    CHECK(betti_profile(c, circle_theta(3), z).dims == std::vector<Index>{1, 1});
    CHECK(betti_profile(c, circle_theta(1), z).dims == std::vector<Index>{0, 0});
}

TEST_CASE("real cocycles on the float backend") {
    const auto c = circle(3);
    const auto theta = RealCocycle::from_edges(c, {{0, 1, 0.5}, {1, 2, 0.25}, {0, 2, 0.0}});
    CHECK(betti_profile(c, theta, 4.0, RankMode::Float()).dims == std::vector<Index>{0, 0});
    CHECK(betti_profile(c, theta, 1.0, RankMode::Float()).dims == std::vector<Index>{1, 1});
    CHECK(kind_of([&] { return betti_profile(c, theta, -2.0, RankMode::Float()); }) == ErrorKind::InvalidMonodromy);
}

TEST_CASE("twisted errors") {
    const auto c = circle(3);
    CHECK(kind_of([&] { return twisted_coboundary(c, circle_theta(), Rational(0), 0); }) == ErrorKind::InvalidMonodromy);
    CHECK(kind_of([&] { return betti_profile(c, circle_theta(), 0.0, RankMode::Float()); }) ==
          ErrorKind::InvalidMonodromy);
    const auto T = SimplicialComplex::build({{0, 1, 2}});
    const auto open = IntegralCocycle::from_edges(T, {{0, 1, 1}, {1, 2, 1}, {0, 2, 0}});
    CHECK(kind_of([&] { return betti_profile(T, open, Rational(2)); }) == ErrorKind::Cocycle);
    CHECK(kind_of([&] { return betti_profile(c, circle_theta(), 2.0, RankMode::Exact()); }) ==
          ErrorKind::BackendMismatch);
    CHECK(kind_of([&] { return twisted_coboundary(c, circle_theta(), Rational(2), 2); }) == ErrorKind::Degree);
}

}  // TEST_SUITE
