#include "besselbound/radial_oracle.hpp"

#include "besselbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

namespace besselbound {

namespace {

constexpr int min_grid_points = 64;
constexpr int max_inverse_sweeps = 100;

// K u = lambda W u with K symmetric tridiagonal and W diagonal, restricted to
// the active unknowns (u_N is dropped for Dirichlet).
struct Discretization {
    std::vector<double> diag;
    std::vector<double> off;
    std::vector<double> weight;
    std::vector<double> grid;
};

Discretization discretize(const RadialProblem& prob, int N)
{
    const double h = prob.R / N;
    const double n = prob.n;
    Discretization d;
    d.grid.resize(N + 1);
    for (int i = 0; i <= N; ++i) {
        d.grid[i] = i * h;
    }
    d.grid[N] = prob.R;

    // Face coefficients r_{i+1/2}^{n-1}/h and cell volumes between faces.
    std::vector<double> face(N);
    for (int i = 0; i < N; ++i) {
        face[i] = std::pow((i + 0.5) * h, n - 1.0) / h;
    }
    auto face_volume = [&](double r) { return std::pow(r, n) / n; };

    const int m = prob.bc == BoundaryKind::Dirichlet ? N : N + 1;
    d.diag.assign(m, 0.0);
    d.off.assign(m - 1, 0.0);
    d.weight.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        const double left = i == 0 ? 0.0 : (i - 0.5) * h;
        const double right = i == N ? prob.R : (i + 0.5) * h;
        d.weight[i] = face_volume(right) - face_volume(left);
        if (i > 0) {
            d.diag[i] += face[i - 1];
        }
        if (i < N) {
            d.diag[i] += face[i];
        }
        if (i + 1 < m) {
            d.off[i] = -face[i];
        }
    }
    if (prob.bc == BoundaryKind::Robin) {
        d.diag[N] += prob.tau * std::pow(prob.R, n - 1.0);
    }
    return d;
}

// Number of eigenvalues of the symmetric tridiagonal (a, b) below x.
int sturm_count(const std::vector<double>& a, const std::vector<double>& b, double x)
{
    constexpr double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = a[0] - x;
    if (q < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (q == 0.0) {
            q = tiny;
        }
        q = a[i] - x - b[i - 1] * b[i - 1] / q;
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

// Solves (T - shift) x = rhs for symmetric tridiagonal T by the Thomas algorithm.
void thomas(const std::vector<double>& a, const std::vector<double>& b, double shift, std::vector<double>& x)
{
    const std::size_t m = a.size();
    std::vector<double> c(m);
    double pivot = a[0] - shift;
    if (pivot == 0.0) {
        fail(ErrorKind::ConvergenceFailure, "singular shifted system");
    }
    x[0] /= pivot;
    for (std::size_t i = 1; i < m; ++i) {
        c[i - 1] = b[i - 1] / pivot;
        pivot = a[i] - shift - b[i - 1] * c[i - 1];
        if (pivot == 0.0) {
            fail(ErrorKind::ConvergenceFailure, "singular shifted system");
        }
        x[i] = (x[i] - b[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        x[i] -= c[i] * x[i + 1];
    }
}

struct Eigenpair {
    double lambda;
    std::vector<double> u;  // in the original (unsymmetrized) variables
    int sweeps;
};

Eigenpair lowest(const Discretization& d)
{
    const std::size_t m = d.diag.size();
    std::vector<double> root_w(m);
    for (std::size_t i = 0; i < m; ++i) {
        root_w[i] = std::sqrt(d.weight[i]);
    }
    // S = W^{-1/2} K W^{-1/2}
    std::vector<double> a(m);
    std::vector<double> b(m > 0 ? m - 1 : 0);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = d.diag[i] / d.weight[i];
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        b[i] = d.off[i] / (root_w[i] * root_w[i + 1]);
    }

    // Gershgorin interval, then bisection on the Sturm count.
    double lo = std::numeric_limits<double>::max();
    double hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
        const double radius = (i > 0 ? std::abs(b[i - 1]) : 0.0) + (i + 1 < m ? std::abs(b[i]) : 0.0);
        lo = std::min(lo, a[i] - radius);
        hi = std::max(hi, a[i] + radius);
    }
    lo = std::min(lo, 0.0) - 1.0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 2000 && hi - lo > 4.0 * eps * std::max(std::abs(lo), std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (sturm_count(a, b, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // Shifted inverse iteration from just below the eigenvalue keeps S - shift positive definite.
    const double shift = lo - 1e-7 * (std::abs(lo) + 1e-6);
    std::vector<double> v(m, 1.0);
    std::vector<double> prev(m);
    int sweeps = 0;
    bool converged = false;
    for (; sweeps < max_inverse_sweeps; ++sweeps) {
        prev = v;
        thomas(a, b, shift, v);
        const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            fail(ErrorKind::ConvergenceFailure, "inverse iteration broke down");
        }
        const double sign = std::accumulate(v.begin(), v.end(), 0.0) < 0.0 ? -1.0 : 1.0;
        for (double& x : v) {
            x *= sign / norm;
        }
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            change = std::max(change, std::abs(v[i] - prev[i]));
        }
        if (change < 1e-14) {
            converged = true;
            ++sweeps;
            break;
        }
    }
    if (!converged) {
        fail(ErrorKind::ConvergenceFailure, "inverse iteration did not converge in " +
                                                std::to_string(max_inverse_sweeps) + " sweeps");
    }

    // Back to u = W^{-1/2} v and the energy-form Rayleigh quotient.
    Eigenpair e;
    e.u.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        e.u[i] = v[i] / root_w[i];
    }
    double energy = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double ku = d.diag[i] * e.u[i];
        if (i > 0) {
            ku += d.off[i - 1] * e.u[i - 1];
        }
        if (i + 1 < m) {
            ku += d.off[i] * e.u[i + 1];
        }
        energy += e.u[i] * ku;
        mass += d.weight[i] * e.u[i] * e.u[i];
    }
    e.lambda = energy / mass;
    e.sweeps = sweeps;
    return e;
}

void validate(const RadialProblem& prob)
{
    if (prob.n < 2) {
        fail(ErrorKind::DimensionError, "dimension n must be >= 2");
    }
    if (!(prob.R > 0.0) || !std::isfinite(prob.R)) {
        fail(ErrorKind::InvalidInput, "radius R must be positive and finite");
    }
    if (prob.bc == BoundaryKind::Robin && (!(prob.tau > 0.0) || !std::isfinite(prob.tau))) {
        fail(ErrorKind::InvalidInput, "Robin parameter tau must be positive and finite");
    }
    if (prob.grid_points < min_grid_points || prob.grid_points % 4 != 0) {
        fail(ErrorKind::DegenerateGrid,
             "grid_points must be a multiple of 4 and at least 64, got " + std::to_string(prob.grid_points));
    }
}

} // namespace

RadialSpectrum solve_lowest(const RadialProblem& prob)
{
    validate(prob);
    const int N = prob.grid_points;
    const auto fine = discretize(prob, N);
    const auto pair = lowest(fine);
    const double half = lowest(discretize(prob, N / 2)).lambda;
    const double quarter = lowest(discretize(prob, N / 4)).lambda;

    RadialSpectrum s;
    s.lambda_1 = pair.lambda;
    s.lambda_half = half;
    s.lambda_quarter = quarter;
    s.lambda_1_extrapolated = (4.0 * pair.lambda - half) / 3.0;
    const double d1 = quarter - half;
    const double d2 = half - pair.lambda;
    s.order_estimate = (d1 != 0.0 && d2 != 0.0) ? std::log2(std::abs(d1 / d2)) : 0.0;
    s.grid = fine.grid;
    s.weights = fine.weight;
    s.eigenvector = pair.u;
    if (prob.bc == BoundaryKind::Dirichlet) {
        s.eigenvector.push_back(0.0);
        const double inner = (N - 0.5) * (prob.R / N);
        s.weights.push_back((std::pow(prob.R, prob.n) - std::pow(inner, prob.n)) / prob.n);
    }
    const double peak = *std::max_element(s.eigenvector.begin(), s.eigenvector.end());
    for (double& x : s.eigenvector) {
        x /= peak;
    }
    s.iterations = pair.sweeps;
    return s;
}

std::vector<std::pair<double, double>> robin_sweep(int n, double R, const std::vector<double>& taus, int grid_points)
{
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0) || (i > 0 && !(taus[i] > taus[i - 1]))) {
            fail(ErrorKind::InvalidInput, "taus must be positive and strictly ascending");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const auto s = solve_lowest(RadialProblem{n, R, BoundaryKind::Robin, tau, grid_points});
        out.emplace_back(tau, s.lambda_1_extrapolated);
    }
    return out;
}

void write_eigenvector_csv(std::ostream& out, const RadialSpectrum& spec)
{
    out << "r,u\n";
    char line[64];
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", spec.grid[i], spec.eigenvector[i]);
        out << line;
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<std::pair<double, double>>& sweep)
{
    out << "tau,lambda_1\n";
    char line[64];
    for (const auto& [tau, lambda] : sweep) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", tau, lambda);
        out << line;
    }
}

} // namespace besselbound
