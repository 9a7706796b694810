// Steed's method for J_nu and Y_nu, x >= 2, nu >= 0.
//
// CF1 gives f = J'_nu / J_nu, a downward recurrence carries the ratio to an
// order mu with |mu| <= nu close to or below x, and the complex continued
// fraction CF2 gives p + iq = (J'_mu + iY'_mu) / (J_mu + iY_mu). The
// Wronskian 2/(pi x) then fixes the absolute normalisation.

#include "besselbound/errors.hpp"
#include "besselbound/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace besselbound::detail {

namespace {
constexpr int max_iterations = 200000;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double fpmin = std::numeric_limits<double>::min() / eps;
} // namespace

SteedResult steed_jy(double nu, double x)
{
    if (!(x >= 2.0) || !(nu >= 0.0)) {
        fail(ErrorKind::DomainError, "Steed evaluation needs x >= 2 and nu >= 0");
    }

    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double mu = nu - nl;
    const double mu2 = mu * mu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double wronskian = xi2 / std::numbers::pi;

    // CF1 by modified Lentz.
    int isign = 1;
    double h = std::max(nu * xi, fpmin);
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int iterations = 0;
    int i = 1;
    for (; i <= max_iterations; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < fpmin) {
            d = fpmin;
        }
        c = b - 1.0 / c;
        if (std::abs(c) < fpmin) {
            c = fpmin;
        }
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) {
            isign = -isign;
        }
        if (std::abs(del - 1.0) < eps) {
            break;
        }
    }
    if (i > max_iterations) {
        fail(ErrorKind::NonConvergence, "continued fraction CF1 did not converge");
    }
    iterations += i;

    // Downward recurrence of J and J' from nu to mu, arbitrary scale.
    double jl = static_cast<double>(isign);
    double jpl = h * jl;
    const double jl_top = jl;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double jtemp = fact * jl + jpl;
        fact -= xi;
        jpl = fact * jtemp - jl;
        jl = jtemp;
    }
    if (jl == 0.0) {
        jl = eps;
    }
    const double f = jpl / jl;

    // CF2 (Steed), complex arithmetic spelled out.
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    fact = a * xi / (p * p + q * q);
    double cr = br + q * fact;
    double ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for (i = 2; i <= max_iterations; ++i) {
        a += 2.0 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::abs(dr) + std::abs(di) < fpmin) {
            dr = fpmin;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::abs(cr) + std::abs(ci) < fpmin) {
            cr = fpmin;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::abs(dlr - 1.0) + std::abs(dli) < eps) {
            break;
        }
    }
    if (i > max_iterations) {
        fail(ErrorKind::NonConvergence, "continued fraction CF2 did not converge");
    }
    iterations += i;

    const double gam = (p - f) / q;
    double jmu = std::sqrt(wronskian / ((p - f) * gam + q));
    jmu = std::copysign(jmu, jl);
    double ymu = jmu * gam;
    const double ymup = ymu * (p + q / gam);
    double y1 = mu * xi * ymu - ymup;

    const double j = jl_top * (jmu / jl);
    for (int k = 1; k <= nl; ++k) {
        const double ytemp = (mu + k) * xi2 * y1 - ymu;
        ymu = y1;
        y1 = ytemp;
    }

    if (!std::isfinite(j) || !std::isfinite(ymu)) {
        fail(ErrorKind::NonConvergence, "Steed recurrence left the floating-point range");
    }
    return {j, ymu, iterations};
}

} // namespace besselbound::detail
