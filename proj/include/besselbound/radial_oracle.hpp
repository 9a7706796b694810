#pragma once

// Finite-volume eigensolver for the radial Laplacian on the ball B_R in R^n:
//     -u'' - (n-1)/r u' = lambda u,  u'(0) = 0,
// with Dirichlet, Neumann or Robin (-u'(R) = tau u(R)) conditions at r = R.

#include <iosfwd>
#include <utility>
#include <vector>

namespace besselbound {

enum class BoundaryKind { Dirichlet, Neumann, Robin };

struct RadialProblem {
    int n = 3;
    double R = 1.0;
    BoundaryKind bc = BoundaryKind::Dirichlet;
    double tau = 0.0;       ///< Robin parameter, used only for BoundaryKind::Robin
    int grid_points = 4096; ///< intervals on [0, R]; a multiple of 4, at least 64
};

struct RadialSpectrum {
    double lambda_1;               ///< on the finest grid
    double lambda_1_extrapolated;  ///< Richardson combination of h and 2h
    double lambda_half;            ///< on the grid with spacing 2h
    double lambda_quarter;         ///< on the grid with spacing 4h
    double order_estimate;         ///< log2 of successive differences
    std::vector<double> grid;      ///< r_i = i h, i = 0..N
    std::vector<double> eigenvector;  ///< positive, max-normalized; u_N = 0 for Dirichlet
    std::vector<double> weights;   ///< r^{n-1} cell volumes, sum = R^n/n
    int iterations;                ///< inverse-iteration sweeps on the finest grid
};

RadialSpectrum solve_lowest(const RadialProblem& prob);

/// Lowest Robin eigenvalue (extrapolated) for each tau; taus positive ascending.
std::vector<std::pair<double, double>> robin_sweep(int n, double R, const std::vector<double>& taus,
                                                   int grid_points = 1024);

/// Columns: r,u
void write_eigenvector_csv(std::ostream& out, const RadialSpectrum& spec);
/// Columns: tau,lambda_1
void write_sweep_csv(std::ostream& out, const std::vector<std::pair<double, double>>& sweep);

} // namespace besselbound
