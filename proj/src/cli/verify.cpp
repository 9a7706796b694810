#include "verify.hpp"

#include "besselbound/bounds.hpp"
#include "besselbound/comparison_ode.hpp"
#include "besselbound/errors.hpp"
#include "besselbound/radial_oracle.hpp"
#include "besselbound/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace besselbound::cli {

namespace {

constexpr double pi = std::numbers::pi;

struct Battery {
    SuiteResult result;

    void at_most(std::string name, double observed, double tolerance, std::string detail = {})
    {
        result.checks.push_back({std::move(name), observed, tolerance, observed <= tolerance, std::move(detail)});
    }
    void at_least(std::string name, double observed, double floor, std::string detail = {})
    {
        result.checks.push_back({std::move(name), observed, floor, observed >= floor, std::move(detail)});
    }
    void none(std::string name, int violations, std::string detail = {})
    {
        at_most(std::move(name), violations, 0.0, std::move(detail));
    }
};

std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    }
    return g;
}

std::vector<double> half_steps(double lo, double hi)
{
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-12; x += 0.5) {
        v.push_back(x);
    }
    return v;
}

// Half-integer closed forms with the magnitude of their terms.
struct Closed {
    double value;
    double scale;
};

Closed half_integer_closed_form(double nu, double x)
{
    const double env = std::sqrt(2.0 / (pi * x));
    const double s = std::sin(x);
    const double c = std::cos(x);
    if (nu == 0.5) {
        return {env * s, env};
    }
    if (nu == -0.5) {
        return {env * c, env};
    }
    if (nu == 1.5) {
        return {env * (s / x - c), env * (1.0 / x + 1.0)};
    }
    if (nu == -1.5) {
        return {env * (-c / x - s), env * (1.0 / x + 1.0)};
    }
    return {env * ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x), env * (3.0 / (x * x) + 1.0 + 3.0 / x)};
}

SuiteResult bessel_identities(const VerifyParams& p)
{
    Battery b;
    const auto& o = p.eval;
    const auto xs = log_grid(0.05, 50.0, 25);
    const auto orders = half_steps(-10.0, 10.0);

    double cross = 0.0;
    double wronskian = 0.0;
    for (double nu : orders) {
        for (double x : xs) {
            const auto r = lommel_residuals(BesselOrder(nu), x, o);
            const double scale = std::max(1.0, 1.0 / x);
            cross = std::max(cross, r.cross / scale);
            wronskian = std::max(wronskian, r.wronskian / scale);
        }
    }
    b.at_most("lommel cross product", cross, 1e-10, "residual / max(1, 1/x), |nu| <= 10, x in [0.05, 50]");
    b.at_most("wronskian", wronskian, 1e-10, "residual / max(1, 1/x), |nu| <= 10, x in [0.05, 50]");

    double recurrence = 0.0;
    double derivative = 0.0;
    const auto xr = log_grid(0.1, 30.0, 30);
    for (double nu : half_steps(0.0, 10.0)) {
        for (double x : xr) {
            const double jm = bessel_j(nu - 1.0, x, o);
            const double j = bessel_j(nu, x, o);
            const double jp = bessel_j(nu + 1.0, x, o);
            const double scale = std::max({std::abs(jm), std::abs(j), std::abs(jp)});
            recurrence = std::max(recurrence, std::abs(jp - 2.0 * nu / x * j + jm) / scale);
            const auto f = derivative_forms(BesselOrder(nu), x, o);
            const double dscale = std::max(std::abs(jm), std::abs(jp));
            const double spread = std::max({std::abs(f.central - f.lower), std::abs(f.central - f.upper),
                                            std::abs(f.lower - f.upper)});
            derivative = std::max(derivative, spread / dscale);
        }
    }
    b.at_most("three-term recurrence", recurrence, 1e-10, "relative to max |J_k(x)|, nu in {0, 0.5, .., 10}");
    b.at_most("derivative forms agree", derivative, 1e-10, "pairwise, relative to max(|J_{nu-1}|, |J_{nu+1}|)");

    double half = 0.0;
    for (double nu : {0.5, -0.5, 1.5, -1.5, 2.5}) {
        for (double x : log_grid(0.1, 30.0, 60)) {
            const auto c = half_integer_closed_form(nu, x);
            half = std::max(half, std::abs(bessel_j(nu, x, o) - c.value) / c.scale);
        }
    }
    b.at_most("half-integer closed forms", half, 1e-10, "relative to the closed form's term magnitude");

    int quotient_drops = 0;
    int ratio_drops = 0;
    for (double nu : half_steps(0.0, 5.0)) {
        const double j1 = bessel_zero(nu, 1);
        double prev = -1.0;
        for (int i = 1; i <= 1000; ++i) {
            const double x = j1 * i / 1001.0;
            const double q = bessel_j(nu + 1.0, x, o) / bessel_j(nu, x, o);
            if (!(q > prev)) {
                ++quotient_drops;
            }
            prev = q;
        }
        const auto zeros = bessel_zeros(nu, 12);
        double last = 0.0;
        bool have_last = false;
        for (int i = 1; i <= 1000; ++i) {
            const double x = 30.0 * i / 1001.0;
            const bool near_zero =
                std::any_of(zeros.begin(), zeros.end(), [&](double z) { return std::abs(z - x) < 1e-3; });
            if (near_zero) {
                have_last = false;
                continue;
            }
            const double r = bessel_y(nu, x, o) / bessel_j(nu, x, o);
            const bool crossed = std::any_of(zeros.begin(), zeros.end(),
                                             [&](double z) { return z > x - 30.0 / 1001.0 && z < x; });
            if (have_last && !crossed && !(r > last)) {
                ++ratio_drops;
            }
            last = r;
            have_last = true;
        }
    }
    b.none("J_{nu+1}/J_nu increasing on (0, j_{nu,1})", quotient_drops, "1000-point grids, nu in {0, .., 5}");
    b.none("Y_nu/J_nu increasing between zeros", ratio_drops, "1000-point grids on (0, 30)");

    double small = 0.0;
    for (double nu : half_steps(0.0, 10.0)) {
        const double x = 1e-4;
        const double v = x * bessel_j(nu, x, o) / bessel_j(nu + 1.0, x, o);
        small = std::max(small, std::abs(v / (2.0 * (nu + 1.0)) - 1.0));
    }
    b.at_most("x J_nu/J_{nu+1} -> 2(nu+1) at x = 1e-4", small, 1e-6);

    double bowman = 0.0;
    const BowmanParams cases[] = {{1.5, 2.0, 1.0, 1.5, 1.0, 1.0}, {0.5, 1.0, 1.0, 0.5, 1.0, 0.0},
                                  {1.0, 1.0, 1.0, 1.0, 1.0, -0.5}, {0.5, 1.5, 2.0, 0.25, 1.0, 1.0}};
    for (const auto& bp : cases) {
        for (double x : {0.4, 0.7, 1.3, 2.1}) {
            const double h = 1e-4;
            const double ym = bowman_solution(bp, x - h, o);
            const double y = bowman_solution(bp, x, o);
            const double yp = bowman_solution(bp, x + h, o);
            const double r = bowman_operator(bp, x, y, (yp - ym) / (2.0 * h), (yp - 2.0 * y + ym) / (h * h));
            bowman = std::max(bowman, std::abs(r) / std::max(1.0, std::abs(y)));
        }
    }
    b.at_most("Bowman equation residual", bowman, 1e-6, "central differences, step 1e-4");
    return b.result;
}

SuiteResult zeros_suite(const VerifyParams& p)
{
    Battery b;
    int interlace = 0;
    double residual = 0.0;
    for (double nu : half_steps(0.0, 6.0)) {
        const auto a = bessel_zeros(nu, 21);
        const auto c = bessel_zeros(nu + 1.0, 20);
        for (int k = 0; k < 20; ++k) {
            if (!(a[k] < c[k] && c[k] < a[k + 1])) {
                ++interlace;
            }
        }
        for (double z : a) {
            residual = std::max(residual, std::abs(bessel_j(nu, z, p.eval)) / std::abs(bessel_j(nu + 1.0, z, p.eval)));
        }
    }
    b.none("interlacing j_{nu,k} < j_{nu+1,k} < j_{nu,k+1}", interlace, "nu in {0, .., 6}, k <= 20");
    b.at_most("|J_nu(j_{nu,k})| relative to |J'_nu|", residual, 1e-11);

    double seed_gap = 0.0;
    int seed_growth = 0;
    for (double nu : half_steps(0.0, 5.0)) {
        const auto z = bessel_zeros(nu, 20);
        double prev = HUGE_VAL;
        for (int k = 3; k <= 20; ++k) {
            const double gap = std::abs(z[k - 1] - (k + 0.5 * nu - 0.25) * pi);
            seed_gap = std::max(seed_gap, gap / z[k - 1]);
            if (gap > prev + 1e-12) {
                ++seed_growth;
            }
            prev = gap;
        }
    }
    b.at_most("McMahon leading term relative gap, k >= 3", seed_gap, 0.1);
    b.none("McMahon gap decreasing in k", seed_growth);

    int airy = 0;
    for (int nu = 1; nu <= 50; ++nu) {
        if (!(bessel_zero(nu, 1) >= airy_floor(nu))) {
            ++airy;
        }
    }
    b.none("Airy floor below j_{nu,1}", airy, "nu = 1, .., 50");

    int floor_vs_half_n = 0;
    for (int n = 3; n <= 50; ++n) {
        if (!(airy_floor(0.5 * n - 1.0) > 0.5 * n)) {
            ++floor_vs_half_n;
        }
    }
    b.none("Airy floor for nu = n/2 - 1 exceeds n/2", floor_vs_half_n, "n = 3, .., 50");

    double alpha = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const double j1 = bessel_zero(0.5 * n - 1.0, 1);
        for (double f : {0.3, 0.6, 0.9}) {
            alpha = std::max(alpha, alpha_constant(n, f * j1).relative_gap);
        }
    }
    b.at_most("alpha: quotient vs zero series", alpha, 1e-8, "n = 2, .., 10");

    int sign_errors = 0;
    for (int n = 2; n <= 6; ++n) {
        const double nu = 0.5 * n - 1.0;
        for (double c : {0.1, 1.0, 10.0}) {
            const auto root = char_root(n, c);
            for (int i = 1; i <= 100; ++i) {
                const double x = root.first_zero * i / 101.0;
                if (std::abs(x - root.root) < 1e-9) {
                    continue;
                }
                const double g = x * bessel_j(nu + 1.0, x) / bessel_j(nu, x) - c;
                if ((x < root.root) != (g < 0.0)) {
                    ++sign_errors;
                }
            }
        }
    }
    b.none("char_root sign pattern", sign_errors, "100 samples of (0, j_{n/2-1,1})");
    return b.result;
}

double ball_volume_integral(int n, double lambda, double H0)
{
    // Integral over B_{1/H0} of rho^{1-n/2} J_{n/2-1}(sqrt(lambda) rho), per unit sphere area.
    const double k = std::sqrt(lambda);
    const double R = 1.0 / H0;
    return std::pow(R, 0.5 * n) * bessel_j(0.5 * n, k * R) / k;
}

double ball_boundary_integral(int n, double lambda, double H0)
{
    const double R = 1.0 / H0;
    return std::pow(R, n - 1.0) * std::pow(R, 1.0 - 0.5 * n) * bessel_j(0.5 * n - 1.0, std::sqrt(lambda) * R);
}

SuiteResult ode_suite(const VerifyParams&)
{
    Battery b;
    double sup = 0.0;
    double recon = 0.0;
    double det_odd = 0.0;
    double ball_ratio = 0.0;
    double perturbed_ratio = HUGE_VAL;
    double perturbed_share = HUGE_VAL;
    double printed_odd = 0.0;
    double printed_even_ratio = 0.0;
    int boundary_misses = 0;
    for (int n = 2; n <= 5; ++n) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const OdeProblem prob{n, 1.0, lambda, 1.0, -static_cast<double>(n), 0.999};
            const auto sol = integrate_ivp(prob);
            sup = std::max(sup, sol.max_residual / sol.max_abs);
            const auto c = closed_form_coefficients(prob);
            recon = std::max({recon, std::abs(c.y0_residual) / std::abs(prob.y0),
                              std::abs(c.yp0_residual) / std::abs(prob.yp0)});
            if (c.odd) {
                det_odd = std::max(det_odd, std::abs(c.determinant / c.determinant_expected - 1.0));
                printed_odd = std::max({printed_odd, std::abs(c.A_printed - c.A) / std::abs(c.A),
                                        std::abs(c.B_printed - c.B) / std::abs(c.B)});
            } else {
                printed_even_ratio = c.A_printed / c.A;
            }

            const OdeProblem ball{n, 1.0, lambda, ball_volume_integral(n, lambda, 1.0),
                                  -ball_boundary_integral(n, lambda, 1.0), 0.999};
            const auto cb = closed_form_coefficients(ball);
            ball_ratio = std::max(ball_ratio, std::abs(cb.B / cb.A));
            if (first_zero(integrate_ivp(ball)).kind != ZeroKind::Boundary) {
                ++boundary_misses;
            }
            auto off = ball;
            off.yp0 *= 1.01;
            const auto co = closed_form_coefficients(off);
            perturbed_ratio = std::min(perturbed_ratio, std::abs(co.B / co.A));
            // Share of the second solution in y(0); unlike B/A it does not depend on how Z is normalized.
            const double beta = std::sqrt(lambda);
            const double z = n % 2 == 1 ? bessel_j(-0.5 * n, beta) : bessel_y(0.5 * n, beta);
            perturbed_share = std::min(perturbed_share, std::abs(co.B * z / (co.A * bessel_j(0.5 * n, beta))));
        }
    }
    b.at_most("IVP vs closed form, sup relative to max|y|", sup, 1e-7, "n = 2..5, lambda in {0.5, 1, 2}, r <= 0.999");
    b.at_most("closed form reproduces initial data", recon, 1e-9);
    b.at_most("odd-n determinant matches 2 H0 sin(pi n/2)/pi", det_odd, 1e-10);
    b.at_most("odd-n printed coefficients match the solved system", printed_odd, 1e-9);
    b.at_most("ball data: |B|/|A|", ball_ratio, 1e-8);
    b.at_least("perturbed ball data: |B Z(beta)|/|A J(beta)|", perturbed_share, 1e-4, "y'(0) scaled by 1.01");
    b.result.values["perturbed_min_B_over_A"] = perturbed_ratio;
    b.none("ball data classified as the boundary case", boundary_misses);
    b.result.values["even_printed_over_solved_A"] = printed_even_ratio;
    b.result.values["H0_sq_over_pi_sq"] = 1.0 / (pi * pi);

    double residual = 0.0;
    double slope = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const OdeProblem prob{n, 1.0, 1.0, 1.0, -static_cast<double>(n), 0.999};
        const auto c = closed_form_coefficients(prob);
        const double h = 1e-5;
        for (int i = 1; i <= 99; ++i) {
            const double r = 0.01 * i;
            const double ym = closed_form_eval(prob, c.A, c.B, r - h);
            const double y = closed_form_eval(prob, c.A, c.B, r);
            const double yp = closed_form_eval(prob, c.A, c.B, r + h);
            const double lhs = (yp - 2.0 * y + ym) / (h * h) + (n - 1.0) / (1.0 - r) * (yp - ym) / (2.0 * h) + y;
            residual = std::max(residual, std::abs(lhs) / std::max(std::abs(y), 1.0));

            const double nu = 0.5 * n;
            auto g = [&](double t) { return std::pow(1.0 - t, nu) * bessel_j(nu, 1.0 - t); };
            const double fd = (g(r + h) - g(r - h)) / (2.0 * h);
            const double exact = -std::pow(1.0 - r, nu) * bessel_j(nu - 1.0, 1.0 - r);
            slope = std::max(slope, std::abs(fd - exact));
        }
    }
    b.at_most("closed form ODE residual (central differences)", residual, 1e-5, "r in [0, 0.99]");
    b.at_most("d/dr[s^{n/2} J_{n/2}(beta s)] identity", slope, 1e-7);

    int dominated = 0;
    const OdeProblem base{3, 1.0, 1.0, 1.0, -10.0, 0.999};
    const auto plain = integrate_ivp(base);
    const double r0 = plain.R0.value_or(base.r_max);
    for (double delta : {0.01, 0.1}) {
        IvpOptions opts;
        opts.forcing = delta;
        const auto forced = integrate_ivp(base, opts);
        for (std::size_t i = 0; i < plain.grid.size() && plain.grid[i] <= r0; ++i) {
            if (forced.values[i] < plain.values[i] - 1e-12) {
                ++dominated;
            }
        }
    }
    b.none("forced solution dominates on [0, R0]", dominated, "delta in {0.01, 0.1}");

    const auto steep = first_zero(integrate_ivp(OdeProblem{3, 1.0, 1.0, 1.0, -100.0, 0.999}));
    b.at_most("steep data: R0", steep.R0.value_or(HUGE_VAL), 0.05);
    const auto flat = first_zero(integrate_ivp(OdeProblem{3, 1.0, 1e-6, 1.0, 0.0, 0.999}));
    b.none("flat data: no zero", flat.kind == ZeroKind::Absent ? 0 : 1);
    return b.result;
}

SuiteResult robin_ball(const VerifyParams& p)
{
    Battery b;
    const auto ball = robin_ball_eigenvalue(p.n, p.h0, p.tau);
    const double closed = *ball.value;
    const double R = 1.0 / p.h0;
    const auto robin = solve_lowest(RadialProblem{p.n, R, BoundaryKind::Robin, p.tau, p.grid});
    const double oracle = robin.lambda_1_extrapolated;
    b.result.values["closed_form"] = closed;
    b.result.values["oracle"] = oracle;
    b.at_most("oracle vs (H0 x*)^2", std::abs(oracle / closed - 1.0), 1e-6, "relative");

    const auto threshold = robin_threshold_bound(GeometrySpec{p.n, p.h0, 0.0, {}}, p.tau, ball.intermediates.at("root"));
    const double gap = threshold.value ? std::abs(*threshold.value / closed - 1.0) : HUGE_VAL;
    b.at_most("threshold bound at tau0 = x* equals the ball eigenvalue", gap, 1e-9);
    b.at_most("alpha H0 = tau", std::abs(threshold.intermediates.at("threshold") / p.tau - 1.0), 1e-9);

    const auto dirichlet = solve_lowest(RadialProblem{p.n, R, BoundaryKind::Dirichlet, 0.0, p.grid});
    const auto neumann = solve_lowest(RadialProblem{p.n, R, BoundaryKind::Neumann, 0.0, p.grid});
    b.none("Neumann <= Robin <= Dirichlet",
           (neumann.lambda_1 <= robin.lambda_1 && robin.lambda_1 <= dirichlet.lambda_1) ? 0 : 1);

    double mass = 0.0;
    for (std::size_t i = 0; i < robin.grid.size(); ++i) {
        mass += robin.weights[i] * robin.eigenvector[i];
    }
    const double boundary = p.tau * robin.eigenvector.back() * std::pow(R, p.n - 1.0);
    b.at_most("lambda * sum(w u) vs tau u(R) R^{n-1}", std::abs(robin.lambda_1 * mass / boundary - 1.0), 0.02);
    const int negative = static_cast<int>(
        std::count_if(robin.eigenvector.begin(), robin.eigenvector.end(), [](double u) { return !(u > 0.0); }));
    b.none("eigenvector positive", negative);
    b.at_most("sqrt(lambda) R below j_{n/2-1,1}", std::sqrt(oracle) * R - ball.intermediates.at("j_lower"), 0.0);
    return b.result;
}

SuiteResult bounds_consistency(const VerifyParams&)
{
    Battery b;
    double daners = 0.0;
    int threshold_fail = 0;
    for (int n = 2; n <= 6; ++n) {
        for (double h0 : {0.5, 1.0, 2.0}) {
            for (double tau : {0.1, 1.0, 10.0}) {
                const auto ball = robin_ball_eigenvalue(n, h0, tau);
                const auto t = robin_threshold_bound(GeometrySpec{n, h0, 0.0, {}}, tau, ball.intermediates.at("root"));
                if (!t.value) {
                    ++threshold_fail;
                    continue;
                }
                daners = std::max(daners, std::abs(*t.value / *ball.value - 1.0));
            }
        }
    }
    b.at_most("threshold bound reproduces the ball eigenvalue", daners, 1e-9);
    b.none("tau >= alpha H0 accepted at equality", threshold_fail);

    int dominance = 0;
    for (int n = 3; n <= 50; ++n) {
        for (double h0 : {0.5, 1.0, 2.0}) {
            for (double s : {0.0, 1.0}) {
                CurvatureInputs cur;
                cur.min_scalar = s;
                const GeometrySpec geo{n, h0, 0.0, {}};
                if (!(*dirac_conformal_bound(geo, cur).value >= *dirac_bound(geo, cur).value)) {
                    ++dominance;
                }
            }
        }
    }
    b.none("conformal Dirac bound dominates", dominance, "n = 3..50");

    int monotone = 0;
    const double dirichlet = *dirichlet_faber_krahn(GeometrySpec{3, 1.0, 0.0, {}}).value;
    double prev = 0.0;
    for (double tau : log_grid(0.1, 100.0, 31)) {
        const double v = *robin_ball_eigenvalue(3, 1.0, tau).value;
        if (!(v > prev) || !(v < dirichlet)) {
            ++monotone;
        }
        prev = v;
    }
    b.none("ball eigenvalue increasing in tau and below Dirichlet", monotone);

    int chain = 0;
    for (int n = 3; n <= 20; ++n) {
        const double nu = 0.5 * n - 1.0;
        const double t0 = airy_floor(nu);
        const double tau = alpha_constant(n, t0).value;
        const double quarter = 0.25 * n * n;
        if (!(t0 * t0 > quarter && quarter > n * tau - tau * tau)) {
            ++chain;
        }
    }
    b.none("tau0^2 > n^2/4 > n tau - tau^2 at tau = alpha", chain, "tau0 = Airy floor, n = 3..20");

    double limit = 0.0;
    for (int n = 2; n <= 10; ++n) {
        for (double h0 : {0.5, 1.0, 2.0}) {
            const double q = *quotient_lower_bound(GeometrySpec{n, h0, 0.0, {}}, 1e-8).value;
            limit = std::max(limit, std::abs(q - n * h0));
        }
    }
    b.at_most("quotient bound -> n H0 at lambda = 1e-8", limit, 1e-3);

    CurvatureInputs cur;
    cur.p = 1;
    cur.sigma_p = 1.0;
    cur.tau = 1.0;
    const auto pf = pform_bound(GeometrySpec{3, 1.0, 0.0, {}}, cur, bessel_zero(0.5, 1) * 0.9);
    b.at_least("p-form bound above n^2 sigma^2/(8p^2) when tau0 > n/2", *pf.value - 9.0 / 8.0, 0.0);
    return b.result;
}

SuiteResult freitas(const VerifyParams& p)
{
    Battery b;
    if (p.nmax < 3) {
        fail(ErrorKind::InvalidInput, "nmax must be >= 3");
    }
    int floor = 0;
    int strict = 0;
    int order = 0;
    int dominance = 0;
    double margin = HUGE_VAL;
    for (int n = 3; n <= p.nmax; ++n) {
        const auto f = freitas_ratio_check(n);
        floor += f.pass ? 0 : 1;
        strict += f.ratio_sq > f.strict_floor ? 0 : 1;
        order += f.tau1_below_tau0 ? 0 : 1;
        dominance += f.conformal_dominates ? 0 : 1;
        margin = std::min(margin, f.ratio_sq - f.floor);
    }
    b.none("(tau1/tau0)^2 >= (n+1)(n+1-sqrt(4n+1))/(n(n-1))", floor);
    b.none("(tau1/tau0)^2 > (n-2)/(2(n-1))", strict);
    b.none("tau1 < tau0", order);
    b.none("n tau1^2/(n-2) > n tau0^2/(2(n-1))", dominance);
    b.result.values["min_margin"] = margin;
    return b.result;
}

} // namespace

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"bessel-identities", "zeros",  "ode", "robin-ball",
                                                "bounds-consistency", "freitas"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyParams& params)
{
    static const std::map<std::string, std::function<SuiteResult(const VerifyParams&)>> suites{
        {"bessel-identities", bessel_identities}, {"zeros", zeros_suite}, {"ode", ode_suite},
        {"robin-ball", robin_ball}, {"bounds-consistency", bounds_consistency}, {"freitas", freitas}};
    const auto it = suites.find(name);
    if (it == suites.end()) {
        fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
    }
    return it->second(params);
}

} // namespace besselbound::cli
