#include "novikov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "novikov/error.hpp"

namespace novikov {

void BoundsConfig::validate() const {
    if (!(quadrature_tolerance > 0.0) || !(root_tolerance > 0.0) || !(product_cut > 0.0))
        throw Error(ErrorKind::Parameter, "bounds tolerances must be positive");
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tolerance, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // The second test is the rounding floor: an absolute tolerance below the
    // precision of the integral's magnitude can never be met.
    if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance ||
        std::abs(delta) <= 64.0 * std::numeric_limits<double>::epsilon() * std::abs(left + right))
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, tolerance / 2.0, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tolerance / 2.0, depth - 1);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require_n(int n, int minimum, const char* what) {
    if (n < minimum) throw Error(ErrorKind::Parameter, std::string(what) + " needs n >= " + std::to_string(minimum));
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tolerance, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tolerance, max_depth);
}

double wallis(int n) {
    require_n(n, 2, "wallis");
    const int m = n - 1;
    double value = (m % 2 == 0) ? std::numbers::pi : 2.0;
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) value *= static_cast<double>(k - 1) / k;
    return value;
}

double nu_of(int n) {
    require_n(n, 3, "nu");
    return static_cast<double>(n) / (n - 2);
}

RootResult c_of_b(int n, double b, const BoundsConfig& config) {
    require_n(n, 2, "C(b)");
    config.validate();
    if (!(b > 0.0) || !std::isfinite(b)) throw Error(ErrorKind::Parameter, "C(b) needs b > 0");
    const double omega = wallis(n);
    // (cosh t + x sinh t)^{n-1} = sum_k binom(n-1,k) x^k cosh^{n-1-k} sinh^k.
    std::vector<double> coeff(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto moment = [n, k](double t) { return std::pow(std::cosh(t), n - 1 - k) * std::pow(std::sinh(t), k); };
        // The k-th moment is at least b^{k+1}/(k+1); keep the tolerance relative to that for small b.
        const double scale = std::min(1.0, std::pow(b, k + 1) / (k + 1));
        coeff[static_cast<std::size_t>(k)] =
            binomial(n - 1, k) * adaptive_simpson(moment, 0.0, b, config.quadrature_tolerance * scale);
    }
    auto F = [&](double x) {
        double s = 0.0;
        for (int k = n - 1; k >= 0; --k) s = s * x + coeff[static_cast<std::size_t>(k)];
        return x * s - omega;
    };
    auto dF = [&](double x) {
        double s = 0.0;
        for (int k = n - 1; k >= 0; --k) s = s * x + (k + 1) * coeff[static_cast<std::size_t>(k)];
        return s;
    };

    RootResult out;
    double lo = 0.0, hi = 1.0;
    while (F(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw Error(ErrorKind::Numerical, "could not bracket C(b)");
    }
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        (F(mid) < 0.0 ? lo : hi) = mid;
        ++out.iterations;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 100 && std::abs(F(x)) > config.root_tolerance; ++i, ++out.iterations) {
        const double next = x - F(x) / dF(x);
        x = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
        (F(x) < 0.0 ? lo : hi) = x;
    }
    out.x = x;
    out.residual = std::abs(F(x));
    if (out.residual > config.root_tolerance) {
        // Rounding floor: accept when no representable neighbour does better.
        const double left = std::abs(F(std::nextafter(x, 0.0))), right = std::abs(F(std::nextafter(x, 1e308)));
        if (out.residual > std::min(left, right))
            throw Error(ErrorKind::Numerical, "C(b) root did not converge");
    }
    return out;
}

double c_of_b_closed_form_n2(double b) {
    const double a = std::cosh(b) - 1.0, s = std::sinh(b);
    return (-s + std::sqrt(s * s + 8.0 * a)) / (2.0 * a);
}

ProductValue b_n(int n, double x, const BoundsConfig& config) {
    config.validate();
    const double nu = nu_of(n);
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::Parameter, "B_n needs x >= 0");
    ProductValue out;
    double log_sum = 0.0;
    for (int i = 0;; ++i) {
        const double p = std::pow(nu, i);
        const double term = 2.0 / p * std::log1p(x * p / std::sqrt(2.0 * p - 1.0));
        log_sum += term;
        out.terms = i + 1;
        if (term < config.product_cut || i > 10000) {
            // Dropped factors j > i obey term_j <= 2 nu^{-j} (log(1+x) + j log nu).
            const double r = 1.0 / nu, A = std::log1p(x), B = std::log(nu);
            const int j = i + 1;
            const double rj = std::pow(r, j);
            out.log_tail_bound = 2.0 * (A * rj / (1.0 - r) + B * rj * (j / (1.0 - r) + r / ((1.0 - r) * (1.0 - r))));
            break;
        }
    }
    out.value = std::exp(log_sum);
    return out;
}

double b_n_small_bound(int n, double x) {
    const double s = std::sqrt(nu_of(n));
    return std::exp(2.0 * x * s / (s - 1.0));
}

double b_n_large_bound(int n, double x, const BoundsConfig& config) {
    const double nu = nu_of(n);
    return b_n(n, 1.0, config).value * std::pow(x, 2.0 * nu / (nu - 1.0));
}

double bc_limit(int n) {
    require_n(n, 2, "b C(b) limit");
    return std::pow(1.0 + n * wallis(n), 1.0 / n) - 1.0;
}

BcTable bc_limit_check(int n, const std::vector<double>& b_grid, const BoundsConfig& config) {
    BcTable table;
    table.n = n;
    table.limit = bc_limit(n);
    const double omega = wallis(n);
    for (std::size_t i = 0; i < b_grid.size(); ++i) {
        if (i > 0 && !(b_grid[i] < b_grid[i - 1]))
            throw Error(ErrorKind::Parameter, "b grid must be positive and decreasing");
        BcRow row;
        row.b = b_grid[i];
        row.b_times_c = row.b * c_of_b(n, row.b, config).x;
        row.omega = omega;
        row.gap = omega - row.b_times_c;
        table.below_omega = table.below_omega && row.b_times_c <= omega;
        if (!table.rows.empty()) {
            const BcRow& prev = table.rows.back();
            table.gap_decreasing = table.gap_decreasing && std::abs(row.gap) < std::abs(prev.gap);
            table.approaching_limit = table.approaching_limit &&
                                      std::abs(table.limit - row.b_times_c) <= std::abs(table.limit - prev.b_times_c);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace novikov
