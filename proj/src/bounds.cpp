#include "besselbound/bounds.hpp"

#include "besselbound/errors.hpp"
#include "besselbound/special_functions.hpp"
#include "besselbound/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace besselbound {

namespace {

// Relative slack when a threshold is met with equality up to root-finding noise.
constexpr double equality_slack = 1e-10;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void check_dimension(int n)
{
    if (n < 2) {
        fail(ErrorKind::DimensionError, "dimension n must be >= 2, got " + std::to_string(n));
    }
    if (n > 2 * max_bessel_order) {
        fail(ErrorKind::DimensionError, "dimension n must be <= " + std::to_string(2 * max_bessel_order));
    }
}

void check_geometry(const GeometrySpec& geo, bool needs_h0 = true)
{
    check_dimension(geo.n);
    if (geo.K != 0.0) {
        fail(ErrorKind::DomainError, "only the K = 0 comparison is supported");
    }
    if (!std::isfinite(geo.H0) || (needs_h0 && !(geo.H0 > 0.0))) {
        fail(ErrorKind::DomainError, "H0 must be positive and finite, got " + num(geo.H0));
    }
    if (geo.R) {
        if (!(*geo.R > 0.0)) {
            fail(ErrorKind::InvalidInput, "inner radius R must be positive");
        }
        if (geo.H0 > 0.0 && *geo.R > 1.0 / geo.H0) {
            fail(ErrorKind::DomainError, "inner radius R = " + num(*geo.R) + " exceeds 1/H0 = " + num(1.0 / geo.H0));
        }
    }
}

void check_form_degree(int n, int p)
{
    if (p < 1 || p > n - 1) {
        fail(ErrorKind::DomainError, "form degree p must lie in [1, n-1], got " + std::to_string(p));
    }
}

Hypothesis asserted(std::string name, std::string detail)
{
    return {std::move(name), true, std::move(detail), true};
}

Hypothesis checked(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

Hypothesis positive_h0(double H0) { return checked("H0 > 0", H0 > 0.0, "H0 = " + num(H0)); }

Hypothesis ricci_nonnegative() { return asserted("Ric >= 0", "asserted by caller"); }

void withhold(BoundReport& report, const std::string& why)
{
    report.value.reset();
    report.informative = false;
    report.explanation = why;
}

void mark_vacuous_if_nonpositive(BoundReport& report)
{
    if (report.value && !(*report.value > 0.0)) {
        report.informative = false;
        report.warnings.push_back("bound is not positive and carries no information");
    }
}

double spinor_curvature_term(int n, double min_scalar) { return n * min_scalar / (4.0 * (n - 1.0)); }

} // namespace

bool BoundReport::hypotheses_hold() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.satisfied; });
}

BoundReport quotient_lower_bound(const GeometrySpec& geo, double lambda)
{
    check_geometry(geo);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        fail(ErrorKind::InvalidInput, "lambda must be positive and finite");
    }
    const int n = geo.n;
    const double nu = 0.5 * n - 1.0;
    const double root = std::sqrt(lambda);
    const double x = root / geo.H0;
    const double j_lower = bessel_zero(nu, 1);
    const double j_upper = bessel_zero(nu + 1.0, 1);

    BoundReport r;
    r.bound_name = "quotient";
    r.intermediates = {{"x", x}, {"j_lower", j_lower}, {"j_upper", j_upper}, {"sqrt_lambda", root}};
    r.hypotheses = {ricci_nonnegative(), positive_h0(geo.H0),
                    asserted("f > 0 and Delta f <= lambda f", "asserted by caller"),
                    checked("sqrt(lambda)/H0 < j_{n/2,1}", x < j_upper, num(x) + " vs " + num(j_upper))};
    if (!(x < j_upper)) {
        fail(ErrorKind::HypothesisViolated,
             "sqrt(lambda)/H0 = " + num(x) + " is not below j_{n/2,1} = " + num(j_upper));
    }
    const double v = root * bessel_j(nu, x) / bessel_j(nu + 1.0, x);
    r.value = v;
    r.explanation = "lower bound for the ratio of boundary to volume integrals of f";
    if (x < j_lower) {
        r.equality_case = "M is isometric to the Euclidean ball of radius 1/H0";
    } else {
        r.informative = false;
        r.warnings.push_back("sqrt(lambda)/H0 lies in [j_{n/2-1,1}, j_{n/2,1}); the coefficient is not positive");
    }
    return r;
}

BoundReport isoperimetric_bound(const GeometrySpec& geo)
{
    check_geometry(geo);
    BoundReport r;
    r.bound_name = "isoperimetric";
    r.hypotheses = {ricci_nonnegative(), positive_h0(geo.H0)};
    r.value = geo.n * geo.H0;
    r.equality_case = "Euclidean ball of radius 1/H0";
    r.explanation = "Vol(boundary)/Vol(M) >= n H0";
    return r;
}

BoundReport dirichlet_faber_krahn(const GeometrySpec& geo)
{
    check_geometry(geo);
    const double j = bessel_zero(0.5 * geo.n - 1.0, 1);
    BoundReport r;
    r.bound_name = "dirichlet";
    r.hypotheses = {ricci_nonnegative(), positive_h0(geo.H0)};
    r.intermediates = {{"j_lower", j}};
    r.value = geo.H0 * geo.H0 * j * j;
    r.equality_case = "Euclidean ball of radius 1/H0";
    r.explanation = "first Dirichlet eigenvalue >= H0^2 j_{n/2-1,1}^2";
    return r;
}

BoundReport robin_threshold_bound(const GeometrySpec& geo, double tau, double tau0)
{
    check_geometry(geo);
    if (!std::isfinite(tau)) {
        fail(ErrorKind::InvalidInput, "tau must be finite");
    }
    const auto alpha = alpha_constant(geo.n, tau0);
    const double threshold = alpha.value * geo.H0;

    BoundReport r;
    r.bound_name = "robin-threshold";
    r.intermediates = {{"tau0", tau0},
                       {"alpha", alpha.value},
                       {"alpha_series", alpha.series},
                       {"alpha_relative_gap", alpha.relative_gap},
                       {"zeros_used", alpha.zeros_used},
                       {"threshold", threshold}};
    const bool at_threshold = std::abs(tau - threshold) <= equality_slack * std::max(std::abs(tau), 1.0);
    const bool ok = tau >= threshold || at_threshold;
    r.hypotheses = {ricci_nonnegative(), positive_h0(geo.H0),
                    checked("tau >= alpha H0", ok, "tau = " + num(tau) + ", alpha H0 = " + num(threshold))};
    if (alpha.relative_gap > 1e-8) {
        r.warnings.push_back("alpha quotient and zero series differ by " + num(alpha.relative_gap));
    }
    if (!ok) {
        withhold(r, "tau is below alpha H0");
        return r;
    }
    r.value = geo.H0 * geo.H0 * tau0 * tau0;
    r.equality_case = "M is the Euclidean ball of radius 1/H0 and tau = alpha H0";
    if (at_threshold) {
        r.warnings.push_back("tau = alpha H0 to within root-finding accuracy");
    }
    r.explanation = "first Robin eigenvalue >= H0^2 tau0^2";
    return r;
}

BoundReport robin_ball_eigenvalue(int n, double H0, double tau)
{
    check_geometry(GeometrySpec{n, H0, 0.0, {}});
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        fail(ErrorKind::InvalidInput, "tau must be positive and finite");
    }
    const auto root = char_root(n, tau / H0);
    BoundReport r;
    r.bound_name = "robin-ball";
    r.hypotheses = {ricci_nonnegative(), positive_h0(H0), checked("tau > 0", true, "tau = " + num(tau))};
    r.intermediates = {{"root", root.root},
                       {"c", root.c},
                       {"j_lower", root.first_zero},
                       {"residual", root.residual}};
    r.value = H0 * H0 * root.root * root.root;
    r.equality_case = "exact on the Euclidean ball of radius 1/H0; any other M has a larger first Robin eigenvalue";
    r.explanation = "(H0 x)^2 with x the root of x J_{n/2}(x)/J_{n/2-1}(x) = tau/H0";
    return r;
}

BoundReport dirac_bound(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_geometry(geo);
    const int n = geo.n;
    const double tau0 = char_root(n, n - 1.0).root;
    BoundReport r;
    r.bound_name = "dirac";
    r.strict = true;
    r.hypotheses = {ricci_nonnegative(), asserted("spin structure", "asserted by caller"),
                    asserted("boundary condition", "CHI, MIT, gAPS or mgAPS asserted by caller"),
                    positive_h0(geo.H0)};
    r.intermediates = {{"tau0", tau0}, {"min_scalar", cur.min_scalar}};
    r.value = spinor_curvature_term(n, cur.min_scalar) + n * geo.H0 * geo.H0 * tau0 * tau0 / (2.0 * (n - 1.0));
    r.equality_case = "none; the inequality is strict";
    r.explanation = "lambda^2 > n minS/(4(n-1)) + n H0^2 tau0^2/(2(n-1))";
    mark_vacuous_if_nonpositive(r);
    return r;
}

BoundReport mit_bound(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_geometry(geo);
    if (!(cur.im_lambda >= 0.0)) {
        fail(ErrorKind::InvalidInput, "Im(lambda) must be nonnegative");
    }
    const int n = geo.n;
    BoundReport r;
    r.bound_name = "mit";
    r.hypotheses = {asserted("spin structure", "asserted by caller"),
                    asserted("MIT bag boundary condition", "asserted by caller"), positive_h0(geo.H0),
                    checked("Im(lambda) >= 0", true, "Im(lambda) = " + num(cur.im_lambda))};
    r.intermediates = {{"min_scalar", cur.min_scalar}, {"im_lambda", cur.im_lambda}};
    r.value = spinor_curvature_term(n, cur.min_scalar) + n * geo.H0 * cur.im_lambda;
    r.equality_case = "M carries an imaginary Killing spinor and the boundary is totally umbilical with constant "
                      "mean curvature";
    r.explanation = "|lambda|^2 >= n minS/(4(n-1)) + n H0 Im(lambda)";
    mark_vacuous_if_nonpositive(r);
    return r;
}

BoundReport yamabe_bound(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_geometry(geo);
    const int n = geo.n;
    if (n < 3) {
        fail(ErrorKind::DimensionError, "the Yamabe bound needs n >= 3");
    }
    const double tau1 = char_root(n, 0.5 * (n - 2.0)).root;
    BoundReport r;
    r.bound_name = "yamabe";
    r.hypotheses = {ricci_nonnegative(), positive_h0(geo.H0)};
    r.intermediates = {{"tau1", tau1}, {"min_scalar", cur.min_scalar}};
    r.value = cur.min_scalar + 4.0 * (n - 1.0) / (n - 2.0) * tau1 * tau1 * geo.H0 * geo.H0;
    r.equality_case = "round ball in R^n";
    r.explanation = "mu_1 >= minS + 4(n-1)/(n-2) tau1^2 H0^2";
    mark_vacuous_if_nonpositive(r);
    return r;
}

BoundReport dirac_conformal_bound(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_geometry(geo);
    const int n = geo.n;
    if (n < 3) {
        fail(ErrorKind::DimensionError, "the conformal Dirac bound needs n >= 3");
    }
    const double tau1 = char_root(n, 0.5 * (n - 2.0)).root;
    const auto plain = dirac_bound(geo, cur);
    BoundReport r;
    r.bound_name = "dirac-conformal";
    r.strict = true;
    r.hypotheses = {ricci_nonnegative(), asserted("spin structure", "asserted by caller"),
                    asserted("boundary condition", "CHI or MIT bag asserted by caller"), positive_h0(geo.H0)};
    r.value = spinor_curvature_term(n, cur.min_scalar) + n * tau1 * tau1 * geo.H0 * geo.H0 / (n - 2.0);
    r.intermediates = {{"tau1", tau1},
                       {"tau0", plain.intermediates.at("tau0")},
                       {"dirac_bound", *plain.value},
                       {"min_scalar", cur.min_scalar}};
    if (!(*r.value > *plain.value)) {
        r.warnings.push_back("conformal bound does not exceed the tau0 bound");
    }
    r.equality_case = "none; the inequality is strict";
    r.explanation = "|lambda|^2 > n minS/(4(n-1)) + n tau1^2 H0^2/(n-2)";
    mark_vacuous_if_nonpositive(r);
    return r;
}

BoundReport pform_bound(const GeometrySpec& geo, const CurvatureInputs& cur, double tau0)
{
    check_geometry(geo, false);
    const int n = geo.n;
    const int p = cur.p;
    check_form_degree(n, p);
    if (!(cur.sigma_p > 0.0)) {
        fail(ErrorKind::DomainError, "sigma_p must be positive, got " + num(cur.sigma_p));
    }
    const auto alpha = alpha_constant(n, tau0);
    const double threshold = cur.sigma_p * (alpha.value / (2.0 * p) - 1.0);
    const bool at_threshold = std::abs(cur.tau - threshold) <= equality_slack * std::max(std::abs(cur.tau), 1.0);
    const bool ok = cur.tau >= threshold || at_threshold;

    BoundReport r;
    r.bound_name = "pform";
    r.strict = true;
    r.hypotheses = {asserted("curvature operator >= 0", "asserted by caller"),
                    checked("sigma_p > 0", true, "sigma_p = " + num(cur.sigma_p)),
                    checked("tau > 0", cur.tau > 0.0, "tau = " + num(cur.tau)),
                    checked("tau >= sigma_p (alpha/(2p) - 1)", ok,
                            "tau = " + num(cur.tau) + ", threshold = " + num(threshold))};
    r.intermediates = {{"tau0", tau0}, {"alpha", alpha.value}, {"threshold", threshold}, {"p", p}};
    if (!r.hypotheses_hold()) {
        withhold(r, "tau is not positive or lies below the threshold");
        return r;
    }
    r.value = cur.sigma_p * cur.sigma_p * tau0 * tau0 / (2.0 * p * p);
    if (tau0 > 0.5 * n) {
        r.intermediates["ball_floor"] = n * n * cur.sigma_p * cur.sigma_p / (8.0 * p * p);
    }
    r.equality_case = "none; the inequality is strict";
    r.explanation = "lambda_{1,p} > sigma_p^2 tau0^2/(2p^2)";
    return r;
}

BoundReport pform_ball_comparison(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_dimension(geo.n);
    check_form_degree(geo.n, cur.p);
    if (!(cur.sigma_p > 0.0)) {
        fail(ErrorKind::DomainError, "sigma_p must be positive, got " + num(cur.sigma_p));
    }
    if (!(cur.tau > 0.0)) {
        fail(ErrorKind::InvalidInput, "tau must be positive");
    }
    const double h0 = cur.sigma_p / cur.p;
    const auto ball = robin_ball_eigenvalue(geo.n, h0, cur.tau);
    BoundReport r;
    r.bound_name = "pform-ball";
    r.strict = true;
    r.hypotheses = {asserted("curvature operator >= 0", "asserted by caller"),
                    checked("sigma_p > 0", true, "sigma_p = " + num(cur.sigma_p)),
                    checked("tau > 0", true, "tau = " + num(cur.tau))};
    r.intermediates = {{"H0", h0}, {"root", ball.intermediates.at("root")}, {"ball_eigenvalue", *ball.value}};
    r.value = 0.5 * *ball.value;
    r.equality_case = "none; the inequality is strict";
    r.explanation = "lambda_{1,p} > lambda_1(tau, ball with H0 = sigma_p/p)/2";
    return r;
}

BoundReport gap_bound(const CurvatureInputs& cur)
{
    if (cur.p < 1) {
        fail(ErrorKind::DomainError, "form degree p must be >= 1");
    }
    BoundReport r;
    r.bound_name = "gap";
    r.hypotheses = {asserted("isometric immersion in Euclidean space", "asserted by caller"),
                    checked("sigma_p >= 0", cur.sigma_p >= 0.0, "sigma_p = " + num(cur.sigma_p))};
    r.intermediates = {{"p", cur.p}, {"inf_W_minus_T", cur.inf_W_minus_T}};
    if (!(cur.sigma_p >= 0.0)) {
        withhold(r, "the boundary is not p-convex");
        return r;
    }
    const double v = cur.inf_W_minus_T / cur.p;
    r.value = v;
    r.explanation = "lambda_{1,p} - lambda_{1,p-1} >= inf(W - T)/p";
    if (v == 0.0) {
        r.warnings.push_back("Euclidean p-convex: lambda_{1,p} >= lambda_{1,p-1}");
    } else if (v < 0.0) {
        r.informative = false;
        r.warnings.push_back("negative gap bound carries no information");
    }
    return r;
}

BoundReport gallot_meyer_bound(const GeometrySpec& geo, const CurvatureInputs& cur)
{
    check_dimension(geo.n);
    const int n = geo.n;
    const int p = cur.p;
    check_form_degree(n, p);
    if (!(cur.gamma > 0.0)) {
        fail(ErrorKind::DomainError, "gamma must be positive, got " + num(cur.gamma));
    }
    const double c = std::max(p + 1, n - p + 1);
    const double threshold = -c / (c - 1.0) * cur.sigma_p;

    BoundReport r;
    r.bound_name = "gallot-meyer";
    r.intermediates = {{"c", c}, {"threshold", threshold}, {"gamma", cur.gamma}};
    r.hypotheses = {asserted("curvature operator >= gamma", "asserted by caller"),
                    checked("gamma > 0", true, "gamma = " + num(cur.gamma))};
    if (cur.tau >= threshold) {
        r.intermediates["branch"] = 1;
        r.value = p * (n - p) * c / (c - 1.0) * cur.gamma;
        r.explanation = "tau >= -c/(c-1) sigma_p: lambda_{1,p} >= p(n-p) c/(c-1) gamma";
        return r;
    }
    const double denominator = (c - 1.0) / c * cur.nu_1p - cur.sigma_p;
    r.intermediates["branch"] = 2;
    r.intermediates["denominator"] = denominator;
    r.intermediates["nu_1p"] = cur.nu_1p;
    r.hypotheses.push_back(checked("(c-1)/c nu_1p - sigma_p > 0", denominator > 0.0, "value = " + num(denominator)));
    if (!(denominator > 0.0)) {
        fail(ErrorKind::DenominatorNonpositive,
             "(c-1)/c nu_1p - sigma_p = " + num(denominator) + " is not positive");
    }
    r.value = p * (n - p) * (cur.nu_1p + cur.tau) / denominator * cur.gamma;
    r.explanation = "tau < -c/(c-1) sigma_p: lambda_{1,p} >= p(n-p)(nu_1p + tau) gamma / ((c-1)/c nu_1p - sigma_p)";
    if (cur.tau > 0.0) {
        r.warnings.push_back("this branch with tau > 0 forces sigma_p < 0");
    }
    mark_vacuous_if_nonpositive(r);
    return r;
}

BoundReport cotangent_bound(double lambda, double R)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        fail(ErrorKind::InvalidInput, "lambda must be positive and finite");
    }
    if (!(R > 0.0) || !std::isfinite(R)) {
        fail(ErrorKind::InvalidInput, "inner radius R must be positive and finite");
    }
    const double root = std::sqrt(lambda);
    const double x = root * R;
    BoundReport r;
    r.bound_name = "cotangent";
    r.intermediates = {{"sqrt_lambda_R", x}};
    r.hypotheses = {ricci_nonnegative(), asserted("H0 = 0 (mean-convex boundary)", "asserted by caller"),
                    checked("sqrt(lambda) R < pi/2", x < 0.5 * std::numbers::pi, "sqrt(lambda) R = " + num(x))};
    if (!(x < 0.5 * std::numbers::pi)) {
        withhold(r, "sqrt(lambda) R is not below pi/2");
        return r;
    }
    r.value = root / std::tan(x);
    r.explanation = "lower bound sqrt(lambda) cot(sqrt(lambda) R) for the boundary/volume integral quotient";
    return r;
}

} // namespace besselbound
