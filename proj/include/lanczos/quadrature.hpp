#pragma once

// Composite Gauss-Legendre quadrature with adaptive panel bisection.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lanczos/errors.hpp"

namespace lanczos::quadrature {

struct gauss_legendre_rule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

namespace detail {

// P_n(x) and P_n'(x) by the three-term recurrence.
inline std::pair<double, double> legendre(int n, double x) {
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    if (n == 0) return {1.0, 0.0};
    return {p1, n * (x * p1 - p0) / (x * x - 1)};
}

}  // namespace detail

/// n-point rule; nodes from Newton iteration on P_n.
inline gauss_legendre_rule make_gauss_legendre(int n) {
    if (n < 1) throw parameter_error("Gauss-Legendre order must be positive");
    gauss_legendre_rule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = detail::legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = detail::legendre(n, x).second;
        const double w = 2 / ((1 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

/// Pairwise summation in fixed index order.
template <class T>
T pairwise_sum(std::span<const T> values) {
    if (values.empty()) return T{};
    if (values.size() <= 8) {
        T s = values[0];
        for (std::size_t i = 1; i < values.size(); ++i) s += values[i];
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.subspan(0, mid)) + pairwise_sum(values.subspan(mid));
}

template <class T>
T apply_rule(const gauss_legendre_rule& rule, auto&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T s{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

struct adaptive_options {
    double tolerance = 1e-10;         // absolute, on the whole integral
    std::size_t node_budget = 1u << 14;
    int order = 10;
    int initial_panels = 8;
};

template <class T>
struct adaptive_result {
    T value;
    T previous;
    std::size_t nodes;
    int refinements;
};

/// Integrates f over [a, b]. Each pass bisects every panel whose two-half
/// estimate differs from its one-panel estimate by more than its share of
/// the tolerance; stops once two successive global estimates agree to the
/// tolerance. Throws quadrature_error if the next pass would exceed the node
/// budget. Panel order, and therefore the summation order, is fixed.
template <class T, class F>
adaptive_result<T> integrate_adaptive(F&& f, double a, double b, const adaptive_options& opt = {}) {
    if (!(b > a)) throw parameter_error("integration interval must satisfy a < b");
    const auto rule = make_gauss_legendre(opt.order);
    const std::size_t order = static_cast<std::size_t>(opt.order);

    struct panel {
        double lo, hi;
        T whole;
    };
    std::vector<panel> panels;
    const double width0 = (b - a) / opt.initial_panels;
    for (int i = 0; i < opt.initial_panels; ++i) {
        const double lo = a + width0 * i;
        const double hi = (i + 1 == opt.initial_panels) ? b : a + width0 * (i + 1);
        panels.push_back({lo, hi, apply_rule<T>(rule, f, lo, hi)});
    }
    auto total = [&] {
        std::vector<T> parts;
        parts.reserve(panels.size());
        for (const auto& p : panels) parts.push_back(p.whole);
        return pairwise_sum<T>(parts);
    };

    T previous = total();
    for (int pass = 1;; ++pass) {
        std::vector<panel> next;
        next.reserve(panels.size() * 2);
        bool split_any = false;
        for (const auto& p : panels) {
            const double mid = 0.5 * (p.lo + p.hi);
            const T left = apply_rule<T>(rule, f, p.lo, mid);
            const T right = apply_rule<T>(rule, f, mid, p.hi);
            const double share = opt.tolerance * (p.hi - p.lo) / (b - a);
            if (std::abs(left + right - p.whole) > share) {
                next.push_back({p.lo, mid, left});
                next.push_back({mid, p.hi, right});
                split_any = true;
            } else {
                next.push_back({p.lo, p.hi, left + right});
            }
        }
        if (next.size() * order > opt.node_budget) {
            panels = std::move(next);
            throw quadrature_error(std::complex<double>(total()), std::complex<double>(previous),
                                   panels.size() * order);
        }
        panels = std::move(next);
        const T current = total();
        if (!split_any || std::abs(current - previous) <= opt.tolerance) {
            return {current, previous, panels.size() * order, pass};
        }
        previous = current;
    }
}

}  // namespace lanczos::quadrature
