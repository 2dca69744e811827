#pragma once

// Error sweeps of complex-r coefficient sets against exact and high-order
// reference values, and CSV emission of the results.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"
#include "lanczos/evaluator.hpp"
#include "lanczos/reference.hpp"

namespace lanczos::harness {

inline constexpr int default_terms = 10;

struct error_record {
    std::complex<double> z_plus_1;
    free_parameter r;
    std::complex<double> approx;
    std::complex<double> reference;
    double abs_err;
    double rel_err;
};

inline error_record make_record(std::complex<double> z_plus_1, const free_parameter& r,
                                std::complex<double> approx, std::complex<double> reference) {
    const double abs_err = std::abs(approx - reference);
    const double mag = std::abs(reference);
    if (!(mag > 0)) throw domain_error("relative error needs a nonzero reference");
    return {z_plus_1, r, approx, reference, abs_err, abs_err / mag};
}

/// Where reference values come from.
class reference_oracle {
public:
    enum class kind { exact_integer, exact_half_integer, high_order_lanczos };

    static reference_oracle exact_integer() { return reference_oracle(kind::exact_integer); }
    static reference_oracle exact_half_integer() { return reference_oracle(kind::exact_half_integer); }
    /// Forces construction and validation of the reference set.
    static reference_oracle high_order_lanczos() {
        (void)reference_set();
        return reference_oracle(kind::high_order_lanczos);
    }

    /// Picks the exact kind from the argument class.
    static reference_oracle exact_for(double z_plus_1) {
        return z_plus_1 == std::floor(z_plus_1) ? exact_integer() : exact_half_integer();
    }

    kind type() const noexcept { return kind_; }

    std::complex<double> gamma_zp1(std::complex<double> z_plus_1) const {
        switch (kind_) {
            case kind::exact_integer:
                if (z_plus_1.imag() != 0 || z_plus_1.real() != std::floor(z_plus_1.real()))
                    throw oracle_domain_error("integer oracle applied to a non-integer argument");
                return exact_gamma_zp1(z_plus_1.real());
            case kind::exact_half_integer:
                if (z_plus_1.imag() != 0 || z_plus_1.real() == std::floor(z_plus_1.real()))
                    throw oracle_domain_error("half-integer oracle applied to a non-half-integer argument");
                return exact_gamma_zp1(z_plus_1.real());
            case kind::high_order_lanczos:
                return gamma(z_plus_1, reference_set());
        }
        throw oracle_domain_error("unknown oracle");
    }

private:
    explicit reference_oracle(kind k) : kind_(k) {}
    kind kind_;
};

/// r = 1 + i n pi/6, n = 0..12.
inline std::vector<free_parameter> default_r_family() {
    std::vector<free_parameter> family;
    for (int n = 0; n <= 12; ++n) family.emplace_back(1.0, n * std::numbers::pi / 6);
    return family;
}

/// z + 1 = 6 + i n pi/12, n = 0..24.
inline std::array<std::complex<double>, 25> complex_z_grid() {
    std::array<std::complex<double>, 25> g{};
    for (std::size_t n = 0; n < g.size(); ++n) g[n] = {6.0, double(n) * std::numbers::pi / 12};
    return g;
}

inline free_parameter r_1_20pi() { return {1.0, 20 * std::numbers::pi}; }

/// Gamma(z+1) on the 22-point real grid for every r, exact references.
/// Records are ordered by (r index, z index).
inline std::vector<error_record> sweep_real_axis(std::span<const free_parameter> family, int n_terms) {
    std::vector<error_record> out;
    out.reserve(family.size() * 22);
    for (const auto& r : family) {
        const auto set = generate(r, n_terms);
        for (double zp1 : real_axis_grid()) {
            const auto approx = gamma_zp1(std::complex<double>(zp1 - 1), set);
            const auto ref = reference_oracle::exact_for(zp1).gamma_zp1(zp1);
            out.push_back(make_record(zp1, r, approx, ref));
        }
    }
    return out;
}

/// Gamma(z+1) at z + 1 = 6 + i n pi/12 against the high-order reference.
inline std::vector<error_record> sweep_complex_z(std::span<const free_parameter> family, int n_terms) {
    const auto oracle = reference_oracle::high_order_lanczos();
    const auto grid = complex_z_grid();
    std::vector<error_record> out;
    out.reserve(family.size() * grid.size());
    for (const auto& r : family) {
        const auto set = generate(r, n_terms);
        for (const auto& zp1 : grid) {
            out.push_back(make_record(zp1, r, gamma_zp1(zp1 - 1.0, set), oracle.gamma_zp1(zp1)));
        }
    }
    return out;
}

inline std::vector<error_record> sweep_r1_20pi(int n_terms) {
    const std::array<free_parameter, 1> family{r_1_20pi()};
    return sweep_complex_z(family, n_terms);
}

struct sphere_point {
    double x, y, z;
};

/// Stereographic projection of w onto the unit sphere (0 to the south pole).
inline sphere_point riemann_projection(std::complex<double> w) {
    const double m2 = std::norm(w);
    const double d = 1 + m2;
    return {2 * w.real() / d, 2 * w.imag() / d, (m2 - 1) / d};
}

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline constexpr const char* sweep_csv_header = "r_re,r_im,z_re,z_im,approx_re,approx_im,ref_re,ref_im,abs_err,rel_err";

inline void write_sweep_csv(std::ostream& os, std::span<const error_record> records) {
    using detail::fmt17;
    os << sweep_csv_header << '\n';
    for (const auto& rec : records) {
        os << fmt17(rec.r.real()) << ',' << fmt17(rec.r.imag()) << ',' << fmt17(rec.z_plus_1.real()) << ','
           << fmt17(rec.z_plus_1.imag()) << ',' << fmt17(rec.approx.real()) << ',' << fmt17(rec.approx.imag())
           << ',' << fmt17(rec.reference.real()) << ',' << fmt17(rec.reference.imag()) << ','
           << fmt17(rec.abs_err) << ',' << fmt17(rec.rel_err) << '\n';
    }
}

/// Path of a_k(r_x + i y) over y, with its projection on the Riemann sphere.
inline void write_riemann_path_csv(std::ostream& os, double r_x, std::span<const double> y_values, int k) {
    using detail::fmt17;
    os << "r_x,r_y,k,a_re,a_im,sphere_x,sphere_y,sphere_z\n";
    for (double y : y_values) {
        const auto a = generate(free_parameter(r_x, y), k + 1)[k];
        const auto p = riemann_projection(a);
        os << fmt17(r_x) << ',' << fmt17(y) << ',' << k << ',' << fmt17(a.real()) << ',' << fmt17(a.imag()) << ','
           << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(p.z) << '\n';
    }
}

}  // namespace lanczos::harness
