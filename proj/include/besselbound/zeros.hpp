#pragma once

// Zeros of J_nu and roots of the characteristic equation
//     x J_{n/2}(x) / J_{n/2-1}(x) = c   on (0, j_{n/2-1,1}).

#include "besselbound/special_functions.hpp"

#include <vector>

namespace besselbound {

/// First negative zero of the Airy function Ai.
inline constexpr double airy_a1 = -2.338107410459767;

struct ZeroRequest {
    BesselOrder nu;
    int k;
};

/// k-th positive zero j_{nu,k}; nu >= -1, k >= 1.
double bessel_zero(const ZeroRequest& req);
double bessel_zero(double nu, int k);

/// The first `count` positive zeros of J_nu, ascending.
std::vector<double> bessel_zeros(double nu, int count);

/// Three-term McMahon expansion of j_{nu,k}; used for seeds and tails only.
double mcmahon_zero(double nu, int k);

/// Lower bound nu - a1 (nu/2)^{1/3} for j_{nu,1}, nu > 0.
double airy_floor(double nu, double a1 = airy_a1);

/// The zero memo table is process-wide and mutex-guarded; results never depend on it.
void set_zero_cache_enabled(bool enabled);
bool zero_cache_enabled();
void clear_zero_cache();

/// sum_{k>=1} 2x / (j_{nu,k}^2 - x^2): explicit zeros up to `explicit_zeros`,
/// McMahon-based tail beyond.
struct RatioSeries {
    double value;
    double explicit_part;
    double tail;
    double tail_error_bound;
    int zeros_used;
};
RatioSeries ratio_series(double nu, double x, int explicit_zeros = 200);

struct CharRoot {
    int n;
    double c;
    double root;
    double bracket_lo;
    double bracket_hi;
    double first_zero;  ///< j_{n/2-1,1}
    double residual;    ///< root J_{n/2}(root)/J_{n/2-1}(root) - c
};

/// Unique root of x J_{n/2}(x)/J_{n/2-1}(x) = c on (0, j_{n/2-1,1}).
/// Throws NoRootInInterval when c <= 0.
CharRoot char_root(int n, double c);

/// alpha = tau0 J_{n/2}(tau0)/J_{n/2-1}(tau0), cross-checked against its zero series.
struct AlphaConstant {
    double value;       ///< direct quotient
    double series;      ///< zero-sum evaluation
    double tail;        ///< McMahon tail included in `series`
    double relative_gap;
    int zeros_used;
};
AlphaConstant alpha_constant(int n, double tau0, int explicit_zeros = 200);

/// Dirac/Yamabe root comparison for n >= 3.
struct FreitasCheck {
    int n;
    double tau0;          ///< root for c = n - 1
    double tau1;          ///< root for c = (n - 2)/2
    double ratio_sq;      ///< (tau1/tau0)^2
    double floor;         ///< (n+1)(n+1-sqrt(4n+1)) / (n(n-1))
    double strict_floor;  ///< (n-2) / (2(n-1))
    bool pass;            ///< ratio_sq >= floor
    bool tau1_below_tau0;
    bool conformal_dominates;  ///< n tau1^2/(n-2) > n tau0^2/(2(n-1))
};
FreitasCheck freitas_ratio_check(int n);

} // namespace besselbound
