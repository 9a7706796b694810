#pragma once

// The comparison equation
//     y'' + (n-1) H0/(1 - r H0) y' + lambda y = 0,  y(0) = y0, y'(0) = yp0,
// integrated numerically and solved in closed form. With s = 1 - r H0 and
// beta = sqrt(lambda)/H0 the solution is s^{n/2} (A J_{n/2}(beta s) + B Z(beta s)),
// Z = J_{-n/2} for odd n and Y_{n/2} for even n.

#include <iosfwd>
#include <optional>
#include <vector>

namespace besselbound {

struct OdeProblem {
    int n = 3;
    double H0 = 1.0;
    double lambda = 1.0;
    double y0 = 1.0;    ///< integral of f over M
    double yp0 = -3.0;  ///< minus the integral of f over the boundary
    double r_max = 0.999;
};

struct ClosedFormCoefficients {
    double A;
    double B;
    double determinant;            ///< of the 2x2 system actually solved
    double determinant_expected;   ///< 2 H0 sin(pi n/2)/pi (odd), -2 H0/pi (even)
    double A_printed;              ///< published closed-form expressions, for comparison only
    double B_printed;
    double y0_residual;            ///< reconstructed minus requested initial data
    double yp0_residual;
    bool odd;
};

/// Solves the initial-value linear system directly.
ClosedFormCoefficients closed_form_coefficients(const OdeProblem& prob);

double closed_form_eval(const OdeProblem& prob, double A, double B, double r);
double closed_form_derivative(const OdeProblem& prob, double A, double B, double r);

struct IvpOptions {
    int grid_points = 2001;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double forcing = 0.0;  ///< constant added to the right-hand side: y'' + ... + lambda y = forcing
};

enum class ZeroKind { Interior, Boundary, Absent };

struct FirstZero {
    ZeroKind kind;
    std::optional<double> R0;
    double theta;  ///< (1 - R0 H0)^{n-1}; 0 for the boundary case
};

struct OdeSolution {
    OdeProblem problem;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> derivatives;
    std::vector<double> closed_form;
    double A;
    double B;
    std::optional<double> R0;
    double max_residual;  ///< sup |numeric - closed form| over the grid
    double max_abs;       ///< sup |y| over the grid
    long steps;
    double forcing;
};

/// Adaptive Dormand-Prince integration. Throws DomainError when r_max H0 >= 1
/// and StepUnderflow when r_max is closer than 1e-3/H0 to the singularity.
OdeSolution integrate_ivp(const OdeProblem& prob, const IvpOptions& opts = {});

/// First sign change of y on the grid, refined on the closed form to 1e-10.
/// With no sign change, data whose solution decays like the (1 - r H0)^{n/2}
/// envelope towards r = 1/H0 is classified as the boundary case.
FirstZero first_zero(const OdeSolution& sol);

/// Columns: r,y_numeric,y_closed_form,residual
void write_trajectory_csv(std::ostream& out, const OdeSolution& sol);

} // namespace besselbound
