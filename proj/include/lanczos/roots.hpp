#pragma once

#include <cmath>
#include <limits>

#include "lanczos/errors.hpp"

namespace lanczos::roots {

/// Bisection on a sign-changing bracket [lo, hi] until the bracket is no
/// wider than `width`. Returns the midpoint of the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, double width) {
    double flo = f(lo);
    if (flo == 0) return lo;
    const double fhi = f(hi);
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw parameter_error("bisection bracket does not change sign");
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Newton iteration kept inside the open bracket (lo, hi): any step that
/// would leave the bracket is replaced by a bisection step. f must change
/// sign on the bracket; the bracket shrinks with every evaluated sign.
template <class F, class DF>
double safeguarded_newton(F&& f, DF&& df, double lo, double hi, double guess, int max_iter = 200) {
    double flo = f(lo);
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int i = 0; i < max_iter; ++i) {
        const double fx = f(x);
        if (fx == 0) return x;
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = (d != 0) ? x - fx / d : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step <= 2 * std::numeric_limits<double>::epsilon() * std::abs(x) || hi - lo <= std::numeric_limits<double>::min())
            return x;
    }
    return x;
}

}  // namespace lanczos::roots
