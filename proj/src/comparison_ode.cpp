#include "besselbound/comparison_ode.hpp"

#include "besselbound/errors.hpp"
#include "besselbound/special_functions.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace besselbound {

namespace {

constexpr double singular_margin = 1e-3;
constexpr double zero_width = 1e-10;

void validate(const OdeProblem& prob)
{
    if (prob.n < 2 || prob.n > 2 * max_bessel_order) {
        fail(ErrorKind::DimensionError, "dimension n must lie in [2, 400]");
    }
    if (!(prob.H0 > 0.0) || !std::isfinite(prob.H0)) {
        fail(ErrorKind::InvalidInput, "H0 must be positive and finite");
    }
    if (!(prob.lambda > 0.0) || !std::isfinite(prob.lambda)) {
        fail(ErrorKind::InvalidInput, "lambda must be positive and finite");
    }
    if (!std::isfinite(prob.y0) || !std::isfinite(prob.yp0)) {
        fail(ErrorKind::InvalidInput, "initial data must be finite");
    }
    if (!(prob.r_max > 0.0)) {
        fail(ErrorKind::InvalidInput, "r_max must be positive");
    }
    if (!(prob.r_max * prob.H0 < 1.0)) {
        fail(ErrorKind::DomainError, "r_max H0 must be below 1; the coefficient is singular at r = 1/H0");
    }
}

struct Basis {
    double order;   // n/2
    double beta;    // sqrt(lambda)/H0
    double root;    // sqrt(lambda)
    bool odd;
};

Basis basis_of(const OdeProblem& prob)
{
    return {0.5 * prob.n, std::sqrt(prob.lambda) / prob.H0, std::sqrt(prob.lambda), prob.n % 2 == 1};
}

// Second solution Z and the function whose multiple gives its r-derivative:
// d/dr[s^nu J_nu(beta s)]  = -sqrt(lambda) s^nu J_{nu-1}(beta s)
// d/dr[s^nu J_-nu(beta s)] = +sqrt(lambda) s^nu J_{1-nu}(beta s)
// d/dr[s^nu Y_nu(beta s)]  = -sqrt(lambda) s^nu Y_{nu-1}(beta s)
double second(const Basis& b, double x) { return b.odd ? bessel_j(-b.order, x) : bessel_y(b.order, x); }

double second_slope(const Basis& b, double x)
{
    return b.odd ? b.root * bessel_j(1.0 - b.order, x) : -b.root * bessel_y(b.order - 1.0, x);
}

} // namespace

ClosedFormCoefficients closed_form_coefficients(const OdeProblem& prob)
{
    validate(prob);
    const Basis b = basis_of(prob);
    const double x = b.beta;
    const double j = bessel_j(b.order, x);
    const double jm = bessel_j(b.order - 1.0, x);
    const double z = second(b, x);
    const double m11 = j;
    const double m12 = z;
    const double m21 = -b.root * jm;
    const double m22 = second_slope(b, x);
    const double det = m11 * m22 - m12 * m21;
    const double A = (prob.y0 * m22 - m12 * prob.yp0) / det;
    const double B = (m11 * prob.yp0 - m21 * prob.y0) / det;

    const double boundary = -prob.yp0;
    const double volume = prob.y0;
    ClosedFormCoefficients c{};
    c.A = A;
    c.B = B;
    c.determinant = det;
    c.odd = b.odd;
    if (b.odd) {
        const double sn = sin_pi(0.5 * prob.n);
        c.determinant_expected = 2.0 * prob.H0 * sn / std::numbers::pi;
        const double pre = std::numbers::pi / (2.0 * prob.H0 * sn);
        c.A_printed = pre * (bessel_j(-b.order, x) * boundary + b.root * bessel_j(1.0 - b.order, x) * volume);
        c.B_printed = pre * (-j * boundary + b.root * jm * volume);
    } else {
        c.determinant_expected = -2.0 * prob.H0 / std::numbers::pi;
        const double pre = -prob.H0 / (2.0 * std::numbers::pi);
        c.A_printed = pre * (z * boundary - b.root * bessel_y(b.order - 1.0, x) * volume);
        c.B_printed = pre * (-j * boundary + b.root * jm * volume);
    }
    c.y0_residual = m11 * A + m12 * B - prob.y0;
    c.yp0_residual = m21 * A + m22 * B - prob.yp0;
    return c;
}

double closed_form_eval(const OdeProblem& prob, double A, double B, double r)
{
    validate(prob);
    if (r < 0.0 || r > prob.r_max) {
        fail(ErrorKind::DomainError, "r must lie in [0, r_max]");
    }
    if (A == 0.0 && B == 0.0) {
        return 0.0;
    }
    const Basis b = basis_of(prob);
    const double s = 1.0 - r * prob.H0;
    const double x = b.beta * s;
    double sum = 0.0;
    if (A != 0.0) {
        sum += A * bessel_j(b.order, x);
    }
    if (B != 0.0) {
        sum += B * second(b, x);
    }
    return std::pow(s, b.order) * sum;
}

double closed_form_derivative(const OdeProblem& prob, double A, double B, double r)
{
    validate(prob);
    if (r < 0.0 || r > prob.r_max) {
        fail(ErrorKind::DomainError, "r must lie in [0, r_max]");
    }
    if (A == 0.0 && B == 0.0) {
        return 0.0;
    }
    const Basis b = basis_of(prob);
    const double s = 1.0 - r * prob.H0;
    const double x = b.beta * s;
    double sum = 0.0;
    if (A != 0.0) {
        sum += -b.root * A * bessel_j(b.order - 1.0, x);
    }
    if (B != 0.0) {
        sum += B * second_slope(b, x);
    }
    return std::pow(s, b.order) * sum;
}

OdeSolution integrate_ivp(const OdeProblem& prob, const IvpOptions& opts)
{
    validate(prob);
    if (prob.r_max * prob.H0 > 1.0 - singular_margin + 1e-12) {
        fail(ErrorKind::StepUnderflow, "r_max lies within 1e-3/H0 of the singular point r = 1/H0");
    }
    if (opts.grid_points < 2) {
        fail(ErrorKind::InvalidInput, "grid_points must be >= 2");
    }
    if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
        fail(ErrorKind::InvalidInput, "tolerances must be positive");
    }

    using State = std::array<double, 2>;
    namespace odeint = boost::numeric::odeint;

    const double damping = (prob.n - 1) * prob.H0;
    const double H0 = prob.H0;
    const double lambda = prob.lambda;
    const double forcing = opts.forcing;
    auto rhs = [=](const State& u, State& du, double r) {
        du[0] = u[1];
        du[1] = -damping / (1.0 - r * H0) * u[1] - lambda * u[0] + forcing;
    };

    OdeSolution sol;
    sol.problem = prob;
    sol.forcing = forcing;
    const int m = opts.grid_points;
    sol.grid.resize(m);
    for (int i = 0; i < m; ++i) {
        sol.grid[i] = prob.r_max * i / (m - 1);
    }
    sol.grid.back() = prob.r_max;
    sol.values.reserve(m);
    sol.derivatives.reserve(m);

    auto observer = [&](const State& u, double) {
        sol.values.push_back(u[0]);
        sol.derivatives.push_back(u[1]);
    };
    State u{prob.y0, prob.yp0};
    auto stepper = odeint::make_dense_output(opts.abs_tol, opts.rel_tol, odeint::runge_kutta_dopri5<State>());
    try {
        sol.steps = static_cast<long>(
            odeint::integrate_times(stepper, rhs, u, sol.grid.begin(), sol.grid.end(), prob.r_max / (m - 1) * 0.1,
                                    observer));
    } catch (const odeint::step_adjustment_error& e) {
        fail(ErrorKind::StepUnderflow, std::string("step size collapsed: ") + e.what());
    } catch (const odeint::no_progress_error& e) {
        fail(ErrorKind::StepUnderflow, std::string("integrator made no progress: ") + e.what());
    }
    if (static_cast<int>(sol.values.size()) != m) {
        fail(ErrorKind::StepUnderflow, "integrator stopped before r_max");
    }

    // The closed form solves the unforced equation only.
    const auto coeffs = closed_form_coefficients(prob);
    sol.A = coeffs.A;
    sol.B = coeffs.B;
    sol.closed_form.resize(m);
    sol.max_residual = 0.0;
    sol.max_abs = 0.0;
    for (int i = 0; i < m; ++i) {
        sol.closed_form[i] = closed_form_eval(prob, sol.A, sol.B, sol.grid[i]);
        sol.max_residual = std::max(sol.max_residual, std::abs(sol.values[i] - sol.closed_form[i]));
        sol.max_abs = std::max(sol.max_abs, std::abs(sol.values[i]));
    }
    sol.R0 = first_zero(sol).R0;
    return sol;
}

FirstZero first_zero(const OdeSolution& sol)
{
    const auto& prob = sol.problem;
    const auto& g = sol.grid;
    const auto& v = sol.values;
    if (g.empty() || g.size() != v.size()) {
        fail(ErrorKind::InvalidInput, "solution grid and values are inconsistent");
    }
    const double theta_exp = prob.n - 1.0;
    if (v.front() == 0.0) {
        return {ZeroKind::Interior, 0.0, 1.0};
    }
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (v[i] == 0.0 || (v[i] < 0.0) != (v[i - 1] < 0.0)) {
            double lo = g[i - 1];
            double hi = g[i];
            double ylo = v[i - 1];
            if (sol.forcing == 0.0) {
                // Bisect on the closed form.
                ylo = closed_form_eval(prob, sol.A, sol.B, lo);
                double yhi = closed_form_eval(prob, sol.A, sol.B, hi);
                if ((ylo < 0.0) == (yhi < 0.0) && yhi != 0.0) {
                    // Integration noise on a solution that is already tiny; the closed form keeps its sign.
                    continue;
                }
                while (hi - lo > zero_width) {
                    const double mid = 0.5 * (lo + hi);
                    const double ym = closed_form_eval(prob, sol.A, sol.B, mid);
                    if (ym == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((ym < 0.0) == (ylo < 0.0)) {
                        lo = mid;
                        ylo = ym;
                    } else {
                        hi = mid;
                    }
                }
            } else {
                // Forced trajectories have no closed form; interpolate linearly.
                const double t = v[i - 1] / (v[i - 1] - v[i]);
                lo = hi = g[i - 1] + t * (g[i] - g[i - 1]);
            }
            const double r0 = 0.5 * (lo + hi);
            return {ZeroKind::Interior, r0, std::pow(1.0 - r0 * prob.H0, theta_exp)};
        }
    }
    const double s_end = 1.0 - g.back() * prob.H0;
    const double peak = *std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (std::abs(v.back()) <= std::pow(s_end, 0.5 * prob.n) * std::abs(peak)) {
        return {ZeroKind::Boundary, 1.0 / prob.H0, 0.0};
    }
    return {ZeroKind::Absent, std::nullopt, std::pow(s_end, theta_exp)};
}

void write_trajectory_csv(std::ostream& out, const OdeSolution& sol)
{
    out << "r,y_numeric,y_closed_form,residual\n";
    char line[128];
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", sol.grid[i], sol.values[i], sol.closed_form[i],
                      sol.values[i] - sol.closed_form[i]);
        out << line;
    }
}

} // namespace besselbound
