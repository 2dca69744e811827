#pragma once

// Where a_0(r) is purely real or purely imaginary, and how the coefficient
// magnitudes behave along vertical lines r = r_x + i y.
//
// a_0(r)^2 = 2e e^{2r} / (pi (r + 1/2)) has, up to a positive factor,
//   real part      (r_x + 1/2) cos 2y + y sin 2y
//   imaginary part (r_x + 1/2) sin 2y - y cos 2y.
// a_0 is purely real or purely imaginary exactly where the imaginary part of
// a_0^2 vanishes; the sign of the real part decides which.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"
#include "lanczos/roots.hpp"

namespace lanczos::geometry {

inline constexpr double scan_step = std::numbers::pi / 40;
inline constexpr double root_width = 1e-12;
inline constexpr double residual_tolerance = 1e-10;
inline constexpr double cross_part_tolerance = 1e-8;
inline constexpr double axis_tolerance = 1e-13;

enum class special_kind { purely_real, purely_imaginary };

inline const char* to_string(special_kind k) {
    return k == special_kind::purely_real ? "purely_real" : "purely_imaginary";
}

struct special_point {
    double r_x;
    double r_y_root;
    special_kind kind;
    double condition_residual;
    double a0_cross_part;  // |Re a_0| when purely imaginary, |Im a_0| when purely real
    std::complex<double> a0;
};

/// (r_x + 1/2) sin 2y - y cos 2y; zero iff tan 2y = y / (r_x + 1/2), written
/// without the poles of tan.
inline double special_condition(double r_x, double r_y) {
    if (!(r_x > -0.5)) throw parameter_error("special_condition requires r_x > -1/2");
    return (r_x + 0.5) * std::sin(2 * r_y) - r_y * std::cos(2 * r_y);
}

/// (r_x + 1/2) cos 2y + y sin 2y: negative means purely imaginary a_0,
/// positive purely real.
inline double special_classifier(double r_x, double r_y) {
    return (r_x + 0.5) * std::cos(2 * r_y) + r_y * std::sin(2 * r_y);
}

/// Roots of special_condition on (0, y_max], bracketed on a pi/40 grid and
/// bisected to 1e-12, each classified and checked against a_0 itself.
/// Throws inconsistency_error if a root's a_0 disagrees with its class.
inline std::vector<special_point> find_special_points(double r_x, double y_max) {
    if (!(r_x > -0.5)) throw parameter_error("find_special_points requires r_x > -1/2");
    if (!(y_max > 0) || !std::isfinite(y_max)) throw parameter_error("find_special_points requires y_max > 0");

    auto cond = [r_x](double y) { return special_condition(r_x, y); };
    std::vector<double> grid;
    for (int i = 1; i * scan_step < y_max; ++i) grid.push_back(i * scan_step);
    grid.push_back(y_max);

    std::vector<double> found;
    double prev_y = grid.front();
    double prev_f = cond(prev_y);
    if (prev_f == 0) found.push_back(prev_y);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double y = grid[i];
        const double f = cond(y);
        if (f == 0) {
            found.push_back(y);
        } else if (prev_f != 0 && (f < 0) != (prev_f < 0)) {
            found.push_back(roots::bisect(cond, prev_y, y, root_width));
        }
        prev_y = y;
        prev_f = f;
    }

    std::vector<special_point> out;
    out.reserve(found.size());
    for (double y : found) {
        const double cls = special_classifier(r_x, y);
        if (cls == 0) throw inconsistency_error("special point with vanishing classifier at y = " + std::to_string(y));
        const special_kind kind = cls < 0 ? special_kind::purely_imaginary : special_kind::purely_real;
        const std::complex<double> a0 = leading_coefficient(free_parameter(r_x, y));
        const double cross = kind == special_kind::purely_imaginary ? std::abs(a0.real()) : std::abs(a0.imag());
        const double residual = std::abs(cond(y));
        if (residual > residual_tolerance)
            throw inconsistency_error("special point residual " + std::to_string(residual) + " at y = " + std::to_string(y));
        if (cross / std::abs(a0) > cross_part_tolerance)
            throw inconsistency_error("a_0 at y = " + std::to_string(y) + " is not " + to_string(kind));
        out.push_back({r_x, y, kind, residual, cross, a0});
    }
    return out;
}

/// |a_0(r_x + i y)| for each y > 0.
inline std::vector<std::pair<double, double>> a0_decay_profile(double r_x, std::span<const double> y_values) {
    std::vector<std::pair<double, double>> out;
    out.reserve(y_values.size());
    for (double y : y_values) {
        if (!(y > 0)) throw parameter_error("a0_decay_profile requires y > 0");
        out.emplace_back(y, std::abs(leading_coefficient(free_parameter(r_x, y))));
    }
    return out;
}

/// Ordinary least-squares slope of ys against xs.
inline double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw parameter_error("slope fit needs >= 2 paired points");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

/// Slope of log|a_0(r_x + i y)| against log y.
inline double a0_decay_slope(double r_x, std::span<const double> y_values) {
    std::vector<double> lx, ly;
    for (const auto& [y, mag] : a0_decay_profile(r_x, y_values)) {
        lx.push_back(std::log(y));
        ly.push_back(std::log(mag));
    }
    return least_squares_slope(lx, ly);
}

struct magnitude_table {
    std::vector<double> y;
    std::vector<std::vector<double>> magnitude;  // [y index][k]
};

/// |a_k(r_x + i y)| for k < n_terms at every grid y.
inline magnitude_table magnitude_trajectories(double r_x, std::span<const double> y_grid, int n_terms) {
    magnitude_table t;
    t.y.assign(y_grid.begin(), y_grid.end());
    for (double y : y_grid) {
        const auto set = generate(free_parameter(r_x, y), n_terms);
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(n_terms));
        for (const auto& a : set.coefficients()) row.push_back(std::abs(a));
        t.magnitude.push_back(std::move(row));
    }
    return t;
}

enum class quadrant { first, second, third, fourth, boundary };

inline const char* to_string(quadrant q) {
    switch (q) {
        case quadrant::first: return "I";
        case quadrant::second: return "II";
        case quadrant::third: return "III";
        case quadrant::fourth: return "IV";
        case quadrant::boundary: return "axis";
    }
    return "?";
}

inline quadrant quadrant_of(std::complex<double> w) {
    if (std::abs(w.real()) <= axis_tolerance || std::abs(w.imag()) <= axis_tolerance) return quadrant::boundary;
    if (w.real() > 0) return w.imag() > 0 ? quadrant::first : quadrant::fourth;
    return w.imag() > 0 ? quadrant::second : quadrant::third;
}

inline std::vector<quadrant> quadrant_sequence(const coefficient_set& coeffs) {
    std::vector<quadrant> out;
    out.reserve(static_cast<std::size_t>(coeffs.size()));
    for (const auto& a : coeffs.coefficients()) out.push_back(quadrant_of(a));
    return out;
}

/// True when no two successive coefficients share an open quadrant.
inline bool successive_quadrants_differ(std::span<const quadrant> seq) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] != quadrant::boundary && seq[i] == seq[i - 1]) return false;
    return true;
}

}  // namespace lanczos::geometry
