#include <cmath>
#include <numbers>

#include "novikov/bounds.hpp"
#include "support.hpp"

using namespace novikov;
using novikov::test::kind_of;

TEST_SUITE("bounds") {

TEST_CASE("Wallis values") {
    CHECK(std::abs(wallis(2) - 2.0) <= 1e-12);
    CHECK(std::abs(wallis(3) - std::numbers::pi / 2.0) <= 1e-12);
    CHECK(std::abs(wallis(4) - 4.0 / 3.0) <= 1e-12);
    CHECK(kind_of([] { return wallis(1); }) == ErrorKind::Parameter);
}

TEST_CASE("Wallis recurrence against quadrature") {
    for (int n = 2; n <= 20; ++n) {
        const double q = adaptive_simpson([n](double t) { return std::pow(std::sin(t), n - 1); }, 0.0,
                                          std::numbers::pi, 1e-14);
        CHECK(std::abs(wallis(n) - q) <= 1e-12);
    }
}

TEST_CASE("C(1) for n = 2 is the root of the quadratic") {
    // (cosh 1 - 1) x^2 + sinh(1) x - 2 = 0
    const double a = std::cosh(1.0) - 1.0, b = std::sinh(1.0);
    const double root = (-b + std::sqrt(b * b + 8.0 * a)) / (2.0 * a);
    CHECK(std::abs(a * root * root + b * root - 2.0) <= 1e-14);
    const auto r = c_of_b(2, 1.0);
    CHECK(std::abs(r.x - root) <= 1e-10);
    CHECK(std::abs(c_of_b_closed_form_n2(1.0) - root) <= 1e-15);
    CHECK(r.x == doctest::Approx(1.1210594).epsilon(1e-7));
}

TEST_CASE("C(b) root residual and quadrature oracle") {
    for (int n = 2; n <= 8; ++n) {
        for (const double b : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
            const auto r = c_of_b(n, b);
            CHECK(r.residual <= 1e-12);
            // Independent check: integrate the defining integrand directly.
            const double x = r.x;
            const double lhs =
                x * adaptive_simpson([n, x](double t) { return std::pow(std::cosh(t) + x * std::sinh(t), n - 1); },
                                     0.0, b, 1e-13 * wallis(n) / x);
            CHECK(std::abs(lhs - wallis(n)) <= 1e-8 * wallis(n));
        }
    }
}

TEST_CASE("C(b) decreases in b") {
    for (int n = 2; n <= 6; ++n) {
        double prev = c_of_b(n, 0.1).x;
        for (double b = 0.2; b <= 2.0 + 1e-9; b += 0.1) {
            const double c = c_of_b(n, b).x;
            CHECK(c < prev);
            prev = c;
        }
    }
}

TEST_CASE("b C(b) stays below omega and tends to its true limit") {
    for (int n = 2; n <= 6; ++n) {
        const auto table = bc_limit_check(n, {1.0, 0.5, 0.1, 0.01, 1e-3, 1e-4});
        CHECK(table.below_omega);
        CHECK(table.approaching_limit);
        CHECK(std::abs(table.rows.back().b_times_c - bc_limit(n)) <= 1e-6);
    }
    // n = 2 in closed form: b C(b) -> sqrt(5) - 1.
    CHECK(bc_limit(2) == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-14));
    CHECK(kind_of([] { return bc_limit_check(2, {0.1, 0.5}); }) == ErrorKind::Parameter);
}

TEST_CASE("B_n basic values") {
    for (int n : {3, 4, 5, 10}) {
        CHECK(b_n(n, 0.0).value == 1.0);
        CHECK(std::abs(b_n(n, 1e-12).value - 1.0) <= 1e-9);
    }
    CHECK(kind_of([] { return b_n(2, 1.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { return b_n(4, -1.0); }) == ErrorKind::Parameter);
    CHECK(nu_of(4) == 2.0);
}

TEST_CASE("B_n bounds for n = 4") {
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        CHECK(b_n(4, x).value <= b_n_small_bound(4, x) * (1.0 + 1e-12));
    }
    for (int i = 0; i <= 90; ++i) {
        const double x = 1.0 + i / 10.0;
        CHECK(b_n(4, x).value <= b_n_large_bound(4, x) * (1.0 + 1e-12));
    }
}

TEST_CASE("B_n is nondecreasing in x") {
    for (int n : {3, 4, 5, 10}) {
        double prev = 1.0;
        for (int i = 1; i <= 200; ++i) {
            const double v = b_n(n, i * 0.05).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("B_n truncation against a much finer cut") {
    BoundsConfig fine;
    fine.product_cut = 1e-16;
    for (int n : {3, 4, 10}) {
        for (const double x : {0.5, 1.0, 10.0, 100.0}) {
            const auto coarse = b_n(n, x);
            const double ref = b_n(n, x, fine).value;
            CHECK(std::abs(coarse.value - ref) <= 1e-9 * ref);
            CHECK(std::log(ref / coarse.value) <= coarse.log_tail_bound + 1e-15);
        }
    }
}

TEST_CASE("config validation") {
    BoundsConfig bad;
    bad.root_tolerance = 0.0;
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { return c_of_b(2, 0.0); }) == ErrorKind::Parameter);
}

}  // TEST_SUITE
