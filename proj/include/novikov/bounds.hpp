#pragma once

#include <functional>
#include <vector>

namespace novikov {

struct BoundsConfig {
    double quadrature_tolerance = 1e-10;
    double root_tolerance = 1e-12;
    double product_cut = 1e-12;

    void validate() const;
};

/// Adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tolerance,
                        int max_depth = 50);

/// omega_n = int_0^pi sin^{n-1} t dt, by the recurrence I_m = I_{m-2} (m-1)/m.
double wallis(int n);

/// nu = n / (n - 2).
double nu_of(int n);

struct RootResult {
    double x = 0.0;
    double residual = 0.0;  // |x int_0^b (cosh t + x sinh t)^{n-1} dt - omega_n|
    int iterations = 0;
};

/// The positive root C(b) of x int_0^b (cosh t + x sinh t)^{n-1} dt = omega_n.
/// The integrand is a polynomial in x whose coefficients are integrated once,
/// so the left side is evaluated consistently for bisection and Newton.
RootResult c_of_b(int n, double b, const BoundsConfig& config = {});

/// n = 2 root from the quadratic (cosh b - 1) x^2 + sinh(b) x - 2 = 0.
double c_of_b_closed_form_n2(double b);

struct ProductValue {
    double value = 1.0;
    /// Bound on log(B_n / value) from the dropped factors.
    double log_tail_bound = 0.0;
    int terms = 0;
};

/// B_n(x) = prod_{i>=0} (x nu^i (2 nu^i - 1)^{-1/2} + 1)^{2 nu^{-i}}, n >= 3, x >= 0.
ProductValue b_n(int n, double x, const BoundsConfig& config = {});

/// exp(2 x sqrt(nu) / (sqrt(nu) - 1)), the bound for 0 <= x <= 1.
double b_n_small_bound(int n, double x);
/// B_n(1) x^{2 nu / (nu - 1)}, the bound for x >= 1.
double b_n_large_bound(int n, double x, const BoundsConfig& config = {});

/// lim_{b -> 0} b C(b) = (1 + n omega_n)^{1/n} - 1. With t = b s and
/// x = y / b the defining equation tends to ((1 + y)^n - 1) / n = omega_n.
double bc_limit(int n);

struct BcRow {
    double b = 0.0;
    double b_times_c = 0.0;
    double omega = 0.0;
    double gap = 0.0;  // omega - b C(b)
};

struct BcTable {
    int n = 0;
    double limit = 0.0;  // bc_limit(n)
    std::vector<BcRow> rows;
    bool below_omega = true;     // b C(b) <= omega_n on every row
    bool gap_decreasing = true;  // |omega - b C(b)| shrinks along the (decreasing) grid
    bool approaching_limit = true;  // |bc_limit - b C(b)| shrinks along the grid
};

BcTable bc_limit_check(int n, const std::vector<double>& b_grid, const BoundsConfig& config = {});

}  // namespace novikov
