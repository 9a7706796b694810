#pragma once

/** \file special_functions.hpp
 *
 *  \brief Bessel functions of the first and second kind for real order.
 *
 *  J_nu is summed from its power series in extended (binary128) precision.
 *  When the series' own roundoff estimate says cancellation has eaten the
 *  requested accuracy (large x), evaluation switches to Steed's
 *  continued-fraction method, which needs x >= 2 and a nonnegative order;
 *  negative orders are recovered through the reflection relations.
 *  Integer-order Y_n uses the log / harmonic-sum expansion.
 */

#include <cstdint>

namespace besselbound {

/// Largest |nu| accepted by any evaluator.
inline constexpr double max_bessel_order = 200.0;

/// Euler-Mascheroni constant to 20 digits.
inline constexpr long double euler_gamma = 0.57721566490153286061L;

/// Real Bessel order with exact integer / half-integer classification.
class BesselOrder {
public:
    /// Throws OrderOutOfRange when nu is not finite or |nu| > 200.
    explicit BesselOrder(double nu);

    double value() const noexcept { return nu_; }
    bool is_integer() const noexcept;
    bool is_half_integer() const noexcept;

    BesselOrder shifted(double delta) const { return BesselOrder(nu_ + delta); }
    BesselOrder negated() const { return BesselOrder(-nu_); }

private:
    double nu_;
};

enum class EvalMethod : std::uint8_t { Series, ContinuedFraction, Closed };

struct BesselValue {
    double x = 0.0;
    double value = 0.0;
    double abs_err_estimate = 0.0;
    int terms_used = 1;
    EvalMethod method = EvalMethod::Series;
};

struct EvalOptions {
    /// Relative truncation tolerance of the series.
    double rel_tol = 1e-12;
    /// Hard cap on the number of series terms.
    int max_terms = 500;
};

BesselValue eval_J(BesselOrder nu, double x, const EvalOptions& opts = {});
BesselValue eval_Y(BesselOrder nu, double x, const EvalOptions& opts = {});

/// Convenience wrappers returning only the value.
double bessel_j(double nu, double x, const EvalOptions& opts = {});
double bessel_y(double nu, double x, const EvalOptions& opts = {});

/// J'_nu(x) = J_{nu-1}(x) - (nu/x) J_nu(x).
double eval_J_derivative(BesselOrder nu, double x, const EvalOptions& opts = {});

/// The three lower/upper-order expressions for J'_nu.
struct DerivativeForms {
    double central;  ///< (J_{nu-1} - J_{nu+1}) / 2
    double lower;    ///< J_{nu-1} - (nu/x) J_nu
    double upper;    ///< (nu/x) J_nu - J_{nu+1}
};
DerivativeForms derivative_forms(BesselOrder nu, double x, const EvalOptions& opts = {});

/// Direct quotient J_{nu+1}(x) / J_nu(x). Throws NearPole within 1e-8 of a zero of J_nu.
double ratio_next_over_current(BesselOrder nu, double x, const EvalOptions& opts = {});

/// Absolute residuals of the two cross-product identities.
struct LommelResiduals {
    double cross;      ///< |J_{nu-1}J_{-nu} + J_nu J_{1-nu} - 2 sin(pi nu)/(pi x)|
    double wronskian;  ///< |Y_nu J_{nu+1} - Y_{nu+1} J_nu - 2/(pi x)|
};
LommelResiduals lommel_residuals(BesselOrder nu, double x, const EvalOptions& opts = {});

/// Parameters of y'' - (2a-1)/x y' + (b^2 g^2 x^(2g-2) + (a^2 - m^2 g^2)/x^2) y = 0.
struct BowmanParams {
    double alpha = 0.0;
    double beta = 1.0;
    double gamma_exp = 1.0;
    double m = 0.0;
    double A = 1.0;
    double B = 0.0;
};

/// x^a (A J_m(b x^g) + B Z_m(b x^g)) with Z = Y for integer m and J_{-m} otherwise.
double bowman_solution(const BowmanParams& params, double x, const EvalOptions& opts = {});

/// Left-hand side of the Bowman equation, for residual checks.
double bowman_operator(const BowmanParams& params, double x, double y, double dy, double d2y);

/// sin(pi y) and cos(pi y), exact at multiples of 1/2.
double sin_pi(double y) noexcept;
double cos_pi(double y) noexcept;

namespace detail {

/// J_nu, Y_nu for nu >= 0 and x >= 2 by Steed's method.
struct SteedResult {
    double j;
    double y;
    int iterations;
};
SteedResult steed_jy(double nu, double x);

} // namespace detail

} // namespace besselbound
