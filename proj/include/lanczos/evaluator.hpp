#pragma once

// Gamma evaluation from a coefficient set:
//
//   Gamma(z+1) = sqrt(2 pi) (z+r+1/2)^{z+1/2} e^{-(z+r+1/2)}
//                [ a_0/2 + z/(z+1) a_1 + (z-1)z/((z+2)(z+1)) a_2 + ... ]
//
// with the reflection formula covering Re(z) < 1/2.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <vector>

#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"

namespace lanczos {

/// |z - m| below this for a non-positive integer m is treated as a pole.
inline constexpr double pole_tolerance = 1e-12;

/// Below this Re(z), gamma() reflects.
inline constexpr double reflection_threshold = 0.5;

template <std::floating_point Real>
struct partial_sum_term {
    int k;
    std::complex<Real> rational_factor;  // 1/2 for k = 0
    std::complex<Real> contribution;     // rational_factor * a_k
};

namespace detail {

template <std::floating_point Real>
void check_series_denominators(std::complex<Real> z, int n_terms) {
    for (int k = 1; k < n_terms; ++k) {
        if (std::abs(z + Real(k)) < Real(pole_tolerance)) throw pole_error(-k);
    }
}

// Nearest non-positive integer within the pole tolerance, or 1 if none.
template <std::floating_point Real>
long long nearby_pole(std::complex<Real> z) {
    const Real m = std::round(z.real());
    if (m <= 0 && std::abs(z - std::complex<Real>(m, 0)) < Real(pole_tolerance))
        return static_cast<long long>(m);
    return 1;
}

// log|sin(pi z)| without overflowing for large |Im z|.
template <std::floating_point Real>
Real log_abs_sin_pi(std::complex<Real> z) {
    const Real pi = std::numbers::pi_v<Real>;
    const Real y = std::abs(pi * z.imag());
    if (y > Real(40)) return y - std::log(Real(2));
    return std::log(std::abs(std::sin(pi * z)));
}

}  // namespace detail

/// Terms of the bracketed series, factor_k built incrementally as
/// factor_{k-1} (z-k+1)/(z+k).
template <std::floating_point Real>
std::vector<partial_sum_term<Real>> series_terms(std::complex<Real> z, const basic_coefficient_set<Real>& coeffs) {
    detail::check_series_denominators(z, coeffs.size());
    std::vector<partial_sum_term<Real>> terms;
    terms.reserve(static_cast<std::size_t>(coeffs.size()));
    terms.push_back({0, std::complex<Real>(Real(0.5)), coeffs[0] / Real(2)});
    std::complex<Real> factor(1);
    for (int k = 1; k < coeffs.size(); ++k) {
        factor *= (z - Real(k - 1)) / (z + Real(k));
        terms.push_back({k, factor, coeffs[k] * factor});
    }
    return terms;
}

/// a_0/2 + sum_{k>=1} a_k prod_{j<k} (z-j)/(z+j+1).
template <std::floating_point Real>
std::complex<Real> series_sum(std::complex<Real> z, const basic_coefficient_set<Real>& coeffs) {
    detail::check_series_denominators(z, coeffs.size());
    std::complex<Real> sum = coeffs[0] / Real(2);
    std::complex<Real> factor(1);
    for (int k = 1; k < coeffs.size(); ++k) {
        factor *= (z - Real(k - 1)) / (z + Real(k));
        sum += coeffs[k] * factor;
    }
    return sum;
}

/// Gamma(z+1) directly from the series. Requires Re(z) >= -1/2; use gamma()
/// anywhere else.
template <std::floating_point Real>
std::complex<Real> gamma_zp1(std::complex<Real> z, const basic_coefficient_set<Real>& coeffs) {
    if (!(z.real() >= Real(-0.5))) throw domain_error("gamma_zp1 requires Re(z) >= -1/2");
    const std::complex<Real> base = z + coeffs.parameter().value() + Real(0.5);
    if (base == std::complex<Real>(0)) throw domain_error("z + r + 1/2 vanishes");
    const Real root_two_pi = std::sqrt(Real(2) * std::numbers::pi_v<Real>);
    const std::complex<Real> prefactor = root_two_pi * std::exp((z + Real(0.5)) * std::log(base) - base);
    return prefactor * series_sum(z, coeffs);
}

/// Gamma(z) on the whole plane minus the poles 0, -1, -2, ...
template <std::floating_point Real>
std::complex<Real> gamma(std::complex<Real> z, const basic_coefficient_set<Real>& coeffs) {
    if (const long long m = detail::nearby_pole(z); m <= 0) throw pole_error(m);
    if (z.real() >= Real(reflection_threshold)) return gamma_zp1(z - Real(1), coeffs);

    const Real pi = std::numbers::pi_v<Real>;
    const std::complex<Real> s = std::sin(pi * z);
    if (std::abs(s) < std::numeric_limits<Real>::min()) throw pole_error(static_cast<long long>(std::round(z.real())));
    return pi / (s * gamma(Real(1) - z, coeffs));
}

/// log|Gamma(z)| from log|prefactor| + log|series|, never forming the product.
template <std::floating_point Real>
Real log_abs_gamma(std::complex<Real> z, const basic_coefficient_set<Real>& coeffs) {
    if (const long long m = detail::nearby_pole(z); m <= 0) throw pole_error(m);
    if (z.real() >= Real(reflection_threshold)) {
        const std::complex<Real> w = z - Real(1);
        const std::complex<Real> base = w + coeffs.parameter().value() + Real(0.5);
        const Real log_prefactor = Real(0.5) * std::log(Real(2) * std::numbers::pi_v<Real>) +
                                   ((w + Real(0.5)) * std::log(base)).real() - base.real();
        return log_prefactor + std::log(std::abs(series_sum(w, coeffs)));
    }
    return std::log(std::numbers::pi_v<Real>) - detail::log_abs_sin_pi(z) - log_abs_gamma(Real(1) - z, coeffs);
}

}  // namespace lanczos
