#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lanczos/coefficients.hpp"
#include "lanczos/quadrature.hpp"
#include "lanczos/transform.hpp"

using namespace lanczos;
using namespace lanczos::transform;
using C = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double g(double v, double theta) { return v * (1 - std::log(v)) - std::cos(theta) * std::cos(theta); }

// v by plain long-double bisection on the branch of sign(theta).
long double bisection_oracle(long double theta) {
    const long double c = std::cos(theta) * std::cos(theta);
    long double lo = theta > 0 ? 1.0L : 0.0L, hi = theta > 0 ? std::numbers::e_v<long double> : 1.0L;
    auto h = [c](long double v) { return v * (1 - std::log(v)) - c; };
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        // h decreases on (1, e) and increases on (0, 1).
        const bool below = h(mid) < 0;
        if ((theta > 0) == below)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5L * (lo + hi);
}

}  // namespace

TEST(SolveV, Endpoints) {
    EXPECT_EQ(solve_v(0), 1.0);
    EXPECT_EQ(solve_v(pi / 2), std::numbers::e);
    EXPECT_EQ(solve_v(-pi / 2), 0.0);
    EXPECT_THROW((void)solve_v(1.6), domain_error);
    EXPECT_THROW((void)solve_v(NAN), domain_error);
}

TEST(SolveV, ResidualAndBranchOnDenseGrid) {
    for (int i = 0; i < 1000; ++i) {
        const double theta = -pi / 2 + pi * (i + 0.5) / 1000;
        const double v = solve_v(theta);
        EXPECT_LE(std::abs(g(v, theta)), 1e-12) << theta;
        if (theta > 0) {
            EXPECT_GT(v, 1.0) << theta;
        } else {
            EXPECT_LT(v, 1.0) << theta;
        }
    }
}

TEST(SolveV, AgreesWithBisectionOracle) {
    for (double theta : {-1.5, -1.0, -0.3, -2e-3, 2e-3, 0.3, 1.0, 1.5}) {
        EXPECT_NEAR(solve_v(theta), static_cast<double>(bisection_oracle(theta)), 1e-12) << theta;
    }
}

TEST(SolveV, TaylorRegionAgreesWithLowOrderSeriesAndOracle) {
    for (double theta : {-9e-4, -3e-4, -1e-5, 1e-5, 3e-4, 9e-4}) {
        const double x = std::sin(theta);
        const double three_terms = 1 + std::numbers::sqrt2 * x + x * x / 3 - std::numbers::sqrt2 / 36 * x * x * x;
        EXPECT_NEAR(solve_v(theta), three_terms, 1e-12) << theta;
        EXPECT_NEAR(solve_v(theta), static_cast<double>(bisection_oracle(theta)), 1e-14) << theta;
    }
}

TEST(SolveV, ContinuousAcrossTaylorSwitch) {
    const double below = solve_v(std::nextafter(taylor_switch, 0.0));
    const double above = solve_v(std::nextafter(taylor_switch, 1.0));
    EXPECT_NEAR(below, above, 1e-14);
}

TEST(SolveV, DerivativeMatchesImplicitFormula) {
    // dv/dx from the implicit relation: (1 - x^2)' = -2x = -log(v) v'.
    for (double theta : {-1.2, -0.5, 0.4, 1.1}) {
        const double x = std::sin(theta);
        const double h = 1e-6;
        const double vp = solve_v(std::asin(x + h)), vm = solve_v(std::asin(x - h));
        const double fd = (vp - vm) / (2 * h);
        const double implicit = 2 * x / std::log(solve_v(theta));
        EXPECT_NEAR(fd, implicit, 1e-6 * std::abs(implicit)) << theta;
    }
}

TEST(TaylorCoefficients, FirstThree) {
    EXPECT_EQ(taylor_coefficients(1).size(), 1u);
    const auto c = taylor_coefficients(3);
    EXPECT_NEAR(c[0], std::numbers::sqrt2, 1e-14);
    EXPECT_NEAR(c[1], 1.0 / 3, 1e-14);
    EXPECT_NEAR(c[2], -std::numbers::sqrt2 / 36, 1e-14);
    EXPECT_THROW(taylor_coefficients(0), parameter_error);
    EXPECT_THROW(taylor_coefficients(max_taylor_order + 1), parameter_error);
}

TEST(TaylorCoefficients, SatisfyOrderIdentities) {
    const auto c1 = taylor_coefficients(12);
    std::vector<double> c(c1.size() + 1);
    c[0] = 1;
    for (std::size_t i = 0; i < c1.size(); ++i) c[i + 1] = c1[i];
    for (int n = 2; n <= 12; ++n) {
        double s = (n - 3) * c[static_cast<std::size_t>(n - 1)];
        for (int j = 1; j <= n; ++j)
            s += c[static_cast<std::size_t>(j)] * (n + 1 - j) * c[static_cast<std::size_t>(n + 1 - j)];
        EXPECT_NEAR(s, 0.0, 1e-15) << n;
    }
}

TEST(FEven, LimitAtZeroIsOne) {
    for (const free_parameter& r : {free_parameter(1, 0), free_parameter(1, 2 * pi), free_parameter(7.5, -3)}) {
        EXPECT_EQ(f_even(0, r), C(1));
        EXPECT_NEAR(std::abs(f_even(1e-7, r) - 1.0), 0, 1e-6);
        EXPECT_NEAR(std::abs(f_even(5e-4, r) - f_even(std::nextafter(5e-4, 0.0), r)), 0, 1e-12);
    }
}

TEST(FEven, RealForRealParameterAndConjugateSymmetric) {
    EXPECT_EQ(f_even(0.5, free_parameter(1, 0)).imag(), 0.0);
    const C up = f_even(0.5, free_parameter(1, 2 * pi));
    const C down = f_even(0.5, free_parameter(1, -2 * pi));
    EXPECT_NEAR(std::abs(up - std::conj(down)), 0, 1e-15);
}

TEST(FEven, EvenInTheta) {
    const free_parameter r(2, 1);
    for (double t : {0.1, 0.7, 1.4}) EXPECT_EQ(f_even(t, r), f_even(-t, r));
}

TEST(FEven, DomainGuard) {
    EXPECT_THROW((void)f_even(pi / 2, free_parameter(1, 0)), domain_error);
    EXPECT_NO_THROW((void)f_even(pi / 2 - 2e-9, free_parameter(1, 0)));
    const auto s = sample(0.3, free_parameter(1, 0));
    EXPECT_EQ(s.v, solve_v(0.3));
}

TEST(Quadrature, LeadingCoefficientMatchesClosedForm) {
    const free_parameter r(1, 0);
    EXPECT_NEAR(std::abs(a_k_by_quadrature(0, r) - leading_coefficient(r)), 0, 1e-8);
}

TEST(Quadrature, AgreesWithRecursion) {
    for (const free_parameter& r : {free_parameter(1, 0), free_parameter(1, pi), free_parameter(1, 2 * pi)}) {
        const auto set = generate(r, 10);
        for (int k = 0; k <= 9; ++k) {
            EXPECT_LE(std::abs(a_k_by_quadrature(k, r) - set[k]), 1e-7) << "r_y=" << r.imag() << " k=" << k;
        }
    }
    EXPECT_LE(std::abs(a_k_by_quadrature(5, free_parameter(1, 0)) - generate(free_parameter(1, 0), 10)[5]), 1e-8);
}

TEST(Quadrature, IndexRange) {
    EXPECT_THROW((void)a_k_by_quadrature(-1, free_parameter(1, 0)), parameter_error);
    EXPECT_THROW((void)a_k_by_quadrature(max_quadrature_index + 1, free_parameter(1, 0)), parameter_error);
}

TEST(Quadrature, FourierPartialSumAtZero) {
    const auto set = generate(free_parameter(1, 0), 10);
    C s = set[0] / 2.0;
    for (int k = 1; k <= 9; ++k) s += set[k];
    EXPECT_LE(std::abs(s - 1.0), 10 * std::abs(set[9]));
}

TEST(CosPowerIntegral, HandValues) {
    EXPECT_NEAR(std::abs(cos_power_integral(0.5, 0) - 2.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(cos_power_integral(1.0, 1) - pi / 4), 0, 1e-12);
    EXPECT_EQ(cos_power_integral(1.0, 2), C(0));
    EXPECT_THROW((void)cos_power_integral(-0.5, 0), domain_error);
}

TEST(CosPowerIntegral, AgreesWithDirectQuadrature) {
    for (double z : {0.5, 1.0, 1.5, 2.0}) {
        for (int k = 0; k <= 3; ++k) {
            const auto direct = quadrature::integrate_adaptive<double>(
                [z, k](double t) { return std::pow(std::cos(t), 2 * z) * std::cos(2 * k * t); }, -pi / 2, pi / 2,
                {.tolerance = 1e-13});
            EXPECT_NEAR(std::abs(cos_power_integral(z, k) - direct.value), 0, 1e-10) << "z=" << z << " k=" << k;
        }
    }
}

TEST(CosPowerIntegral, ComplexArgument) {
    const C z(1.3, 0.7);
    const int k = 2;
    const auto direct = quadrature::integrate_adaptive<C>(
        [z, k](double t) { return std::pow(C(std::cos(t)), 2.0 * z) * std::cos(2 * k * t); }, -pi / 2, pi / 2,
        {.tolerance = 1e-13});
    EXPECT_NEAR(std::abs(cos_power_integral(z, k) - direct.value), 0, 1e-10);
}

TEST(IntegrandProfile, EndpointsAndMaximum) {
    const auto p = integrand_profile(101);
    ASSERT_EQ(p.size(), 101u);
    EXPECT_EQ(p.front(), std::make_pair(0.0, 0.0));
    EXPECT_EQ(p.back(), std::make_pair(std::numbers::e, 0.0));
    EXPECT_EQ(integrand_core(1.0), 1.0);
    double best = 0;
    for (const auto& [v, y] : p) best = std::max(best, y);
    EXPECT_LE(best, 1.0);
    EXPECT_GT(best, 0.999);
    EXPECT_THROW(integrand_profile(1), parameter_error);
}
