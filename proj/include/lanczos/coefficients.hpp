#pragma once

// Lanczos coefficients a_0(r) .. a_{N-1}(r) for a complex free parameter r,
// obtained by forcing the truncated series to interpolate n! at z = 0..N-1.

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lanczos/errors.hpp"

namespace lanczos {

inline constexpr int max_factorial_argument = 170;
inline constexpr int max_terms = 40;

/// The free parameter r = r_x + i r_y. Requires r_x > -1/2 so that
/// n + r + 1/2 stays in the right half-plane for every node n >= 0.
template <std::floating_point Real>
class basic_free_parameter {
public:
    basic_free_parameter(Real real_part, Real imag_part) : re_(real_part), im_(imag_part) {
        if (!std::isfinite(re_) || !std::isfinite(im_))
            throw parameter_error("free parameter must be finite");
        if (!(re_ > Real(-0.5)))
            throw parameter_error("free parameter requires Re(r) > -1/2, got " + std::to_string(double(re_)));
    }
    explicit basic_free_parameter(Real real_part) : basic_free_parameter(real_part, Real(0)) {}

    Real real() const noexcept { return re_; }
    Real imag() const noexcept { return im_; }
    std::complex<Real> value() const noexcept { return {re_, im_}; }

    // Polar form, derived on demand.
    Real modulus() const noexcept { return std::hypot(re_, im_); }
    Real argument() const noexcept { return std::atan2(im_, re_); }

    basic_free_parameter conj() const { return {re_, -im_}; }

    template <std::floating_point To>
    basic_free_parameter<To> as() const {
        return {static_cast<To>(re_), static_cast<To>(im_)};
    }

    friend bool operator==(const basic_free_parameter&, const basic_free_parameter&) = default;

private:
    Real re_;
    Real im_;
};

using free_parameter = basic_free_parameter<double>;

/// An immutable set of N coefficients for one free parameter.
template <std::floating_point Real>
class basic_coefficient_set {
public:
    using value_type = std::complex<Real>;

    basic_coefficient_set(basic_free_parameter<Real> r, std::vector<value_type> coefficients)
        : r_(r), a_(std::move(coefficients)) {
        if (a_.empty() || a_.size() > std::size_t(max_terms))
            throw parameter_error("coefficient count must be in [1, " + std::to_string(max_terms) + "]");
    }

    const basic_free_parameter<Real>& parameter() const noexcept { return r_; }
    int size() const noexcept { return static_cast<int>(a_.size()); }
    const value_type& operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }
    std::span<const value_type> coefficients() const noexcept { return a_; }

    /// Rounds every coefficient (and r) to another floating type.
    template <std::floating_point To>
    basic_coefficient_set<To> as() const {
        std::vector<std::complex<To>> out;
        out.reserve(a_.size());
        for (const auto& c : a_) out.emplace_back(static_cast<To>(c.real()), static_cast<To>(c.imag()));
        return {r_.template as<To>(), std::move(out)};
    }

    friend bool operator==(const basic_coefficient_set&, const basic_coefficient_set&) = default;

private:
    basic_free_parameter<Real> r_;
    std::vector<value_type> a_;
};

using coefficient_set = basic_coefficient_set<double>;

/// n! by iterated product.
template <std::floating_point Real = double>
Real factorial(int n) {
    if (n < 0 || n > max_factorial_argument) throw overflow_domain_error(n);
    Real f = 1;
    for (int i = 2; i <= n; ++i) f *= Real(i);
    return f;
}

/// F_r(n) = n! e^{n+r+1/2} / (sqrt(2 pi) (n+r+1/2)^{n+1/2}): the value the
/// bracketed series has to take at the node z = n.
template <std::floating_point Real>
std::complex<Real> series_target(int n, const basic_free_parameter<Real>& r) {
    using C = std::complex<Real>;
    const Real fact = factorial<Real>(n);
    const C base = Real(n) + r.value() + Real(0.5);
    const C power = std::exp((Real(n) + Real(0.5)) * std::log(base));
    const Real root_two_pi = std::sqrt(Real(2) * std::numbers::pi_v<Real>);
    return fact * std::exp(base) / (root_two_pi * power);
}

/// a_0(r) = sqrt(2e / (pi (r + 1/2))) e^r, principal square root.
template <std::floating_point Real>
std::complex<Real> leading_coefficient(const basic_free_parameter<Real>& r) {
    using C = std::complex<Real>;
    const C shifted = r.value() + Real(0.5);
    const C ratio = Real(2) * std::numbers::e_v<Real> / (std::numbers::pi_v<Real> * shifted);
    return std::sqrt(ratio) * std::exp(r.value());
}

/// Generates a_0..a_{n_terms-1} by the nested recursion
///
///   a_n = ((((F_r(n) - a_0/2) (n+1)/n - a_1) (n+2)/(n-1) - a_2) ... - a_{n-1}) 2n/1
///
/// evaluated innermost difference first. The multiplier after subtracting
/// a_{j-1} is (n+j)/(n-j+1).
template <std::floating_point Real>
basic_coefficient_set<Real> generate(const basic_free_parameter<Real>& r, int n_terms) {
    using C = std::complex<Real>;
    if (n_terms < 1 || n_terms > max_terms)
        throw parameter_error("n_terms must be in [1, " + std::to_string(max_terms) + "], got " +
                              std::to_string(n_terms));
    std::vector<C> a;
    a.reserve(static_cast<std::size_t>(n_terms));
    a.push_back(leading_coefficient(r));
    for (int n = 1; n < n_terms; ++n) {
        C t = series_target(n, r) - a[0] / Real(2);
        for (int j = 1; j < n; ++j) t = t * (Real(n + j) / Real(n - j + 1)) - a[static_cast<std::size_t>(j)];
        a.push_back(t * (Real(2 * n) / Real(1)));
    }
    return {r, std::move(a)};
}

}  // namespace lanczos
