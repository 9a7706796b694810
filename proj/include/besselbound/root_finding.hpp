#pragma once

#include "besselbound/errors.hpp"

#include <cmath>
#include <limits>

namespace besselbound {

struct BracketedRoot {
    double root;
    double lo;
    double hi;
    int evaluations;
};

/// Bisection down to `bisect_width`, then Newton polishing that falls back to
/// bisection whenever a step leaves the current bracket.
/// f(lo) and f(hi) must have opposite signs.
template <class F, class DF>
BracketedRoot refine_root(F&& f, DF&& df, double lo, double hi, double bisect_width = 1e-6)
{
    double flo = f(lo);
    double fhi = f(hi);
    int evaluations = 2;
    if (flo == 0.0) {
        return {lo, lo, lo, evaluations};
    }
    if (fhi == 0.0) {
        return {hi, hi, hi, evaluations};
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        fail(ErrorKind::BracketFailure, "endpoints do not bracket a sign change");
    }

    while (hi - lo > bisect_width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        ++evaluations;
        if (fm == 0.0) {
            return {mid, mid, mid, evaluations};
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double fx = f(x);
        ++evaluations;
        if (fx == 0.0) {
            return {x, x, x, evaluations};
        }
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double slope = df(x);
        double next = (slope != 0.0) ? x - fx / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 2.0 * eps * std::abs(x) || hi - lo <= 4.0 * eps * std::abs(x)) {
            return {next, lo, hi, evaluations};
        }
        x = next;
    }
    return {x, lo, hi, evaluations};
}

} // namespace besselbound
