#pragma once

// The Lanczos transform: the change of variables cos^2(theta) = v (1 - log v),
// the even part of sqrt(2) v^r sin(theta) / log v, and its Fourier cosine
// coefficients, which are the Lanczos coefficients a_k(r). Computed here by
// quadrature as an oracle independent of the interpolation recursion.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"
#include "lanczos/quadrature.hpp"
#include "lanczos/reference.hpp"
#include "lanczos/roots.hpp"

namespace lanczos::transform {

inline constexpr int max_taylor_order = 20;
inline constexpr int max_quadrature_index = 20;
inline constexpr double taylor_switch = 1e-3;       // |theta| below: series for v
inline constexpr double endpoint_margin = 1e-9;

struct transform_sample {
    double theta;
    double v;
    std::complex<double> f_even;
};

/// c_1..c_m of v(x) = 1 + c_1 x + c_2 x^2 + ..., the solution of
/// (1/2)(v^2)' - (1 - x^2) v' - 2 x v = 0 with v(0) = 1 and c_1 = +sqrt(2).
///
/// Collecting x^n gives
///   sum_{j=1}^{n} c_j (n+1-j) c_{n+1-j} + (n-3) c_{n-1} = 0,
/// in which c_n appears with weight (n+1) c_1.
inline std::vector<double> taylor_coefficients(int m) {
    if (m < 1 || m > max_taylor_order)
        throw parameter_error("taylor order must be in [1, " + std::to_string(max_taylor_order) + "]");
    std::vector<double> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;
    c[1] = std::numbers::sqrt2;
    for (int n = 2; n <= m; ++n) {
        double s = (n - 3) * c[static_cast<std::size_t>(n - 1)];
        for (int j = 2; j <= n - 1; ++j)
            s += c[static_cast<std::size_t>(j)] * (n + 1 - j) * c[static_cast<std::size_t>(n + 1 - j)];
        c[static_cast<std::size_t>(n)] = -s / ((n + 1) * c[1]);
    }
    c.erase(c.begin());
    return c;
}

namespace detail {

inline const std::vector<double>& series_coefficients() {
    static const std::vector<double> c = taylor_coefficients(12);
    return c;
}

// v(x) - 1 from the Taylor series, Horner form.
inline double taylor_v_minus_one(double x) {
    const auto& c = series_coefficients();
    double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = (s + *it) * x;
    return s;
}

inline double solve_v_unchecked(double theta) {
    if (theta == 0) return 1;
    if (std::abs(theta) < taylor_switch) return 1 + taylor_v_minus_one(std::sin(theta));
    if (theta >= std::numbers::pi / 2) return std::numbers::e;
    if (theta <= -std::numbers::pi / 2) return 0;

    const double c = std::cos(theta) * std::cos(theta);
    auto g = [c](double v) { return v > 0 ? v * (1 - std::log(v)) - c : -c; };
    auto dg = [](double v) { return -std::log(v); };
    const double x = std::sin(theta);
    if (theta > 0) {
        double guess = 1 + std::numbers::sqrt2 * x + x * x / 3;
        return roots::safeguarded_newton(g, dg, 1.0, std::numbers::e, guess);
    }
    double guess = 1 + std::numbers::sqrt2 * x + x * x / 3;
    if (x < -0.5 || !(guess > 0)) guess = c / (1 - std::log(c));
    return roots::safeguarded_newton(g, dg, 0.0, 1.0, guess);
}

// log v(theta), accurate near theta = 0 where v - 1 is small.
inline double log_v(double theta) {
    if (std::abs(theta) < taylor_switch) return std::log1p(taylor_v_minus_one(std::sin(theta)));
    return std::log(solve_v_unchecked(theta));
}

// sqrt(2) v^r sin(theta) / log v for theta != 0.
inline std::complex<double> f_r(double theta, std::complex<double> r) {
    const double lv = log_v(theta);
    return std::numbers::sqrt2 * std::exp(r * lv) * (std::sin(theta) / lv);
}

inline std::complex<double> f_even_unchecked(double theta, std::complex<double> r) {
    if (theta == 0) return 1.0;
    return 0.5 * (f_r(theta, r) + f_r(-theta, r));
}

}  // namespace detail

/// v on the branch selected by sign(theta) (v < 1 for theta < 0, v > 1 for
/// theta > 0) solving v (1 - log v) = cos^2 theta. Safeguarded Newton on
/// g(v) = v (1 - log v) - cos^2 theta; near theta = 0, where g'(1) = 0, the
/// Taylor series in x = sin theta is used instead.
inline double solve_v(double theta) {
    if (!(std::abs(theta) <= std::numbers::pi / 2))
        throw domain_error("solve_v: theta must lie in [-pi/2, pi/2]");
    return detail::solve_v_unchecked(theta);
}

/// Even part of f_r(theta) = sqrt(2) v^r sin(theta) / log v. Equal to 1 at
/// theta = 0 for every r.
inline std::complex<double> f_even(double theta, const free_parameter& r) {
    if (!(std::abs(theta) <= std::numbers::pi / 2 - endpoint_margin))
        throw domain_error("f_even: |theta| must be at most pi/2 - 1e-9");
    // Near 0 log v comes from log1p of the series for v - 1, so
    // sin(theta) / log v stays well conditioned; theta = 0 returns the limit.
    return detail::f_even_unchecked(theta, r.value());
}

inline transform_sample sample(double theta, const free_parameter& r) {
    return {theta, solve_v(theta), f_even(theta, r)};
}

/// a_k(r) = (2/pi) int_{-pi/2}^{pi/2} f_even(theta) cos(2 k theta) d theta.
inline quadrature::adaptive_result<std::complex<double>> coefficient_quadrature(
    int k, const free_parameter& r, const quadrature::adaptive_options& options = {}) {
    if (k < 0 || k > max_quadrature_index)
        throw parameter_error("quadrature index must be in [0, " + std::to_string(max_quadrature_index) + "]");
    const std::complex<double> rv = r.value();
    auto integrand = [rv, k](double theta) {
        return (2 / std::numbers::pi) * detail::f_even_unchecked(theta, rv) * std::cos(2.0 * k * theta);
    };
    return quadrature::integrate_adaptive<std::complex<double>>(integrand, -std::numbers::pi / 2,
                                                                std::numbers::pi / 2, options);
}

inline std::complex<double> a_k_by_quadrature(int k, const free_parameter& r) {
    return coefficient_quadrature(k, r).value;
}

/// int_{-pi/2}^{pi/2} cos^{2z}(theta) cos(2 k theta) d theta in closed form,
///   sqrt(pi) Gamma(z+1/2) Gamma(z+1) / (Gamma(z+k+1) Gamma(z-k+1)),
/// with 1/Gamma(z-k+1) = 0 at its poles.
inline std::complex<double> cos_power_integral(std::complex<double> z, int k) {
    if (!(z.real() > -0.5)) throw domain_error("cos_power_integral requires Re(z) > -1/2");
    if (k < 0) throw parameter_error("cos_power_integral requires k >= 0");
    const std::complex<double> tail = z - double(k) + 1.0;
    if (lanczos::detail::nearby_pole(tail) <= 0) return 0.0;
    const std::complex<double> numerator = reference_gamma(z + 0.5) * reference_gamma(z + 1.0);
    const std::complex<double> denominator = reference_gamma(z + double(k) + 1.0) * reference_gamma(tail);
    return std::sqrt(std::numbers::pi) * numerator / denominator;
}

/// v (1 - log v), the z-independent core of the transformed integrand.
inline double integrand_core(double v) {
    if (v == 0 || v == std::numbers::e) return 0;
    return v * (1 - std::log(v));
}

/// n_points uniformly spaced v in [0, e] paired with v (1 - log v).
inline std::vector<std::pair<double, double>> integrand_profile(int n_points) {
    if (n_points < 2) throw parameter_error("integrand_profile needs at least two points");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double v = (i + 1 == n_points) ? std::numbers::e : std::numbers::e * i / (n_points - 1);
        out.emplace_back(v, integrand_core(v));
    }
    return out;
}

}  // namespace lanczos::transform
