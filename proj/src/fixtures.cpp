#include "novikov/fixtures.hpp"

#include <algorithm>
#include <set>

#include "novikov/wang.hpp"

namespace novikov {

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> integral_cocycle_basis(const SimplicialComplex& K) {
    const Mat<Rational> z = nullspace(rational_coboundary(K, 1));
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> out(z.rows(), z.cols());
    for (Index c = 0; c < z.cols(); ++c) {
        mpz_class lcm = 1, g = 0;
        for (Index r = 0; r < z.rows(); ++r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z(r, c).denominator().get_mpz_t());
        std::vector<mpz_class> col(static_cast<std::size_t>(z.rows()));
        for (Index r = 0; r < z.rows(); ++r) {
            col[static_cast<std::size_t>(r)] = z(r, c).numerator() * (lcm / z(r, c).denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), col[static_cast<std::size_t>(r)].get_mpz_t());
        }
        for (Index r = 0; r < z.rows(); ++r) {
            const mpz_class v = g == 0 ? mpz_class(0) : mpz_class(col[static_cast<std::size_t>(r)] / g);
            if (!v.fits_slong_p()) throw Error(ErrorKind::Numerical, "cocycle basis entry overflows 64 bits");
            out(r, c) = v.get_si();
        }
    }
    return out;
}

IntegralCocycle random_cocycle(const SimplicialComplex& K, Rng& rng, int range) {
    const auto basis = integral_cocycle_basis(K);
    std::uniform_int_distribution<int> coeff(-range, range);
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> v = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Zero(basis.rows());
    for (Index c = 0; c < basis.cols(); ++c) v += coeff(rng) * basis.col(c);
    return IntegralCocycle(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
}

IntegralCocycle random_nonexact_cocycle(const SimplicialComplex& K, Rng& rng, int range) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IntegralCocycle theta = random_cocycle(K, rng, range);
        if (!is_exact(K, theta)) return theta;
    }
    throw Error(ErrorKind::Parameter, "complex has no nonexact integral cocycle");
}

ZeroCochain<std::int64_t> random_potential(const SimplicialComplex& K, Rng& rng, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    ZeroCochain<std::int64_t> f(static_cast<std::size_t>(K.vertex_count()));
    for (auto& v : f) v = d(rng);
    return f;
}

Rational random_lambda(Rng& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    for (;;) {
        const int p = num(rng);
        if (p != 0) return Rational(p, den(rng));
    }
}

SimplicialComplex random_complex(Rng& rng, int max_vertices, Index max_simplices) {
    std::uniform_int_distribution<int> nv(4, std::max(4, max_vertices));
    for (;;) {
        const int n = nv(rng);
        std::uniform_int_distribution<int> count(1, n + 2), dim(0, 3), vertex(0, n - 1);
        std::vector<Simplex> maximal;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            std::set<Vertex> s;
            const int d = std::min(dim(rng), n - 1);
            while (static_cast<int>(s.size()) < d + 1) s.insert(vertex(rng));
            maximal.emplace_back(s.begin(), s.end());
        }
        SimplicialComplex K = SimplicialComplex::build(n, maximal);
        if (K.total_count() <= max_simplices) return K;
    }
}

std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    {
        const auto c = circle(3);
        out.push_back({"circle3", c, circle_cocycle(c, 1), true});
    }
    {
        const auto c = circle(5);
        out.push_back({"circle5", c, circle_cocycle(c, 2), true});
    }
    {
        const auto s = sphere_boundary(2);
        out.push_back({"sphere2", s, IntegralCocycle::zero(s), true});
    }
    {
        auto t = staircase_torus(3, {1, 0});
        out.push_back({"torus2", t.complex, t.cocycle, true});
    }
    {
        auto t = staircase_torus(3, {1, 1});
        out.push_back({"torus2_11", t.complex, t.cocycle, true});
    }
    {
        auto t = staircase_torus(3, {1, 0, 0});
        out.push_back({"torus3", t.complex, t.cocycle, true});
    }
    {
        const auto c = circle(3);
        auto mt = mapping_torus(c, SimplicialMap{{1, 2, 0}}, 3);
        out.push_back({"mapping_torus_circle", mt.complex, mt.fiber_cocycle, true});
    }
    return out;
}

Fixture fixture_by_name(const std::string& name) {
    for (auto& f : standard_fixtures())
        if (f.name == name) return f;
    throw Error(ErrorKind::Usage, "unknown fixture " + name);
}

}  // namespace novikov
