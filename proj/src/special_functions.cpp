#include "besselbound/special_functions.hpp"

#include "besselbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace besselbound {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
constexpr double wide_eps = 1.925929944387236e-34; // 2^-112
#else
using wide = long double;
constexpr double wide_eps = std::numeric_limits<long double>::epsilon();
#endif

constexpr double dbl_eps = std::numeric_limits<double>::epsilon();
constexpr long double ld_eps = std::numeric_limits<long double>::epsilon();
// Series are cut well below the requested tolerance; the extra terms are nearly free.
constexpr double truncation_margin = 1e-3;

inline wide wabs(wide v) { return v < 0 ? -v : v; }

/// Past this argument the power series is not even attempted.
inline bool series_in_reach(double nu, double x) { return x <= 2.0 * std::abs(nu) + 40.0; }

/// Magnitude scale of an oscillating Bessel function at x.
inline double envelope(double x) { return std::sqrt(2.0 / (std::numbers::pi * x)); }

/// sign(Gamma(z)) for z not a nonpositive integer.
int gamma_sign(long double z)
{
    if (z > 0) {
        return 1;
    }
    const auto m = static_cast<long long>(std::floor(-z));
    return (m % 2 == 0) ? -1 : 1;
}

void validate_argument(double x)
{
    if (!std::isfinite(x)) {
        fail(ErrorKind::DomainError, "argument must be finite");
    }
    if (x < 0.0) {
        fail(ErrorKind::DomainError, "argument must be nonnegative, got " + std::to_string(x));
    }
}

double checked(double v, const char* what)
{
    if (!std::isfinite(v)) {
        fail(ErrorKind::Overflow, std::string(what) + " overflows double precision");
    }
    return v;
}

/// Power series of J_nu for nu not a negative integer and x > 0.
/// Empty when roundoff in the alternating sum exceeds the tolerance and a
/// continued-fraction fallback exists (x >= 2).
std::optional<BesselValue> j_series(double nu, double x, const EvalOptions& opts)
{
    const long double half_x = static_cast<long double>(x) / 2.0L;
    const long double log_lead = nu * std::log(half_x) - std::lgamma(static_cast<long double>(nu) + 1.0L);
    const long double lead = gamma_sign(static_cast<long double>(nu) + 1.0L) * std::exp(log_lead);

    const wide q = static_cast<wide>(half_x) * static_cast<wide>(half_x);
    const wide tol = opts.rel_tol * truncation_margin;
    wide term = 1;
    wide sum = 1;
    wide abs_sum = 1;
    wide omitted = 0;
    int terms = 1;
    bool converged = false;
    for (int k = 0; k < opts.max_terms; ++k) {
        const wide denom = static_cast<wide>(k + 1) * (static_cast<wide>(nu) + (k + 1));
        const wide next = -term * q / denom;
        if (denom > q && wabs(next) <= tol * (wabs(sum) + static_cast<wide>(1e-300))) {
            omitted = wabs(next);
            converged = true;
            break;
        }
        term = next;
        sum += term;
        abs_sum += wabs(term);
        ++terms;
    }

    if (!converged) {
        if (x >= 2.0) {
            return std::nullopt;
        }
        fail(ErrorKind::NonConvergence,
             "J series did not reach tolerance within " + std::to_string(opts.max_terms) + " terms");
    }

    const double roundoff = 4.0 * wide_eps * static_cast<double>(abs_sum);
    const double abs_lead = static_cast<double>(std::abs(lead));
    const double scale = std::max(static_cast<double>(wabs(sum)), abs_lead > 0 ? envelope(x) / abs_lead : 0.0);
    if (x >= 2.0 && roundoff > 1e-3 * opts.rel_tol * scale) {
        return std::nullopt;
    }

    const long double value_ld = lead * static_cast<long double>(sum);
    const double value = checked(static_cast<double>(value_ld), "J series");
    const double lead_rel_err = static_cast<double>(ld_eps * (std::abs(log_lead) + 2.0L));
    BesselValue out;
    out.x = x;
    out.value = value;
    out.abs_err_estimate = abs_lead * (static_cast<double>(omitted) + roundoff) +
                           std::abs(value) * (dbl_eps / 2 + lead_rel_err);
    out.terms_used = terms;
    out.method = EvalMethod::Series;
    return out;
}

/// Log / harmonic-sum expansion of Y_n, n >= 0 integer, x > 0.
std::optional<BesselValue> y_integer_series(int n, double x, const EvalOptions& opts)
{
    const long double half_x = static_cast<long double>(x) / 2.0L;
    const long double log_half = std::log(half_x);
    const long double lead = std::exp(n * log_half - std::lgamma(static_cast<long double>(n) + 1.0L));

    const wide q = static_cast<wide>(half_x) * static_cast<wide>(half_x);
    const wide tol = opts.rel_tol * truncation_margin;

    wide harmonic_k = 0;
    wide harmonic_kn = 0;
    for (int j = 1; j <= n; ++j) {
        harmonic_kn += wide(1) / j;
    }

    wide v = 1;
    wide sum_j = 0;
    wide abs_j = 0;
    wide sum_h = 0;
    wide abs_h = 0;
    wide omitted_j = 0;
    wide omitted_h = 0;
    int terms = 0;
    bool converged = false;
    for (int k = 0; k < opts.max_terms; ++k) {
        sum_j += v;
        abs_j += wabs(v);
        const wide th = v * (harmonic_k + harmonic_kn);
        sum_h += th;
        abs_h += wabs(th);
        ++terms;

        const wide denom = static_cast<wide>(k + 1) * static_cast<wide>(k + n + 1);
        const wide next = -v * q / denom;
        harmonic_k += wide(1) / (k + 1);
        harmonic_kn += wide(1) / (k + n + 1);
        const wide next_h = wabs(next) * (harmonic_k + harmonic_kn);
        if (denom > q && wabs(next) <= tol * (wabs(sum_j) + static_cast<wide>(1e-300)) &&
            next_h <= tol * (wabs(sum_h) + static_cast<wide>(1e-300))) {
            omitted_j = wabs(next);
            omitted_h = next_h;
            converged = true;
            break;
        }
        v = next;
    }
    if (!converged) {
        if (x >= 2.0) {
            return std::nullopt;
        }
        fail(ErrorKind::NonConvergence,
             "Y series did not reach tolerance within " + std::to_string(opts.max_terms) + " terms");
    }

    // Finite negative-power part: (x/2)^-n sum_{k<n} (n-k-1)!/k! (x/2)^{2k}.
    wide sum_neg = 0;
    long double neg_lead = 0;
    if (n > 0) {
        neg_lead = std::exp(-n * log_half + std::lgamma(static_cast<long double>(n)));
        wide w = 1;
        sum_neg = 1;
        for (int k = 0; k + 1 <= n - 1; ++k) {
            w = w * q / (static_cast<wide>(k + 1) * static_cast<wide>(n - k - 1));
            sum_neg += w;
        }
    }

    const long double log_term = log_half + euler_gamma;
    const wide lead_w = static_cast<wide>(lead);
    const wide part_log = 2 * lead_w * sum_j * static_cast<wide>(log_term);
    const wide part_neg = static_cast<wide>(neg_lead) * sum_neg;
    const wide part_h = lead_w * sum_h;
    const wide pi_y = part_log - part_neg - part_h;

    const double roundoff =
        4.0 * wide_eps *
            static_cast<double>(lead_w * (2 * abs_j * wabs(static_cast<wide>(log_term)) + abs_h) + part_neg) +
        static_cast<double>(ld_eps * 64) *
            static_cast<double>(wabs(part_log) + wabs(part_neg) + wabs(part_h));
    const double truncation =
        static_cast<double>(lead) * static_cast<double>(omitted_h + 2 * omitted_j * wabs(static_cast<wide>(log_term)));
    const double scale = std::max(static_cast<double>(wabs(pi_y)), std::numbers::pi * envelope(x));
    if (x >= 2.0 && roundoff > 1e-3 * opts.rel_tol * scale) {
        return std::nullopt;
    }

    const double value = checked(static_cast<double>(pi_y / static_cast<wide>(std::numbers::pi)), "Y series");
    BesselValue out;
    out.x = x;
    out.value = value;
    out.abs_err_estimate = (truncation + roundoff) / std::numbers::pi + std::abs(value) * dbl_eps;
    out.terms_used = std::max(terms, 1);
    out.method = EvalMethod::Series;
    return out;
}

BesselValue from_steed(double x, double value, const detail::SteedResult& s)
{
    BesselValue out;
    out.x = x;
    out.value = value;
    out.abs_err_estimate = 8.0 * dbl_eps * (std::abs(s.j) + std::abs(s.y));
    out.terms_used = std::max(s.iterations, 1);
    out.method = EvalMethod::ContinuedFraction;
    return out;
}

BesselValue y_integer(int n, double x, const EvalOptions& opts)
{
    if (series_in_reach(n, x)) {
        if (auto v = y_integer_series(n, x, opts)) {
            return *v;
        }
    }
    const auto s = detail::steed_jy(n, x);
    return from_steed(x, s.y, s);
}

BesselValue negate(BesselValue v)
{
    v.value = -v.value;
    return v;
}

} // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu)
{
    if (!std::isfinite(nu) || std::abs(nu) > max_bessel_order) {
        fail(ErrorKind::OrderOutOfRange, "Bessel order must be finite with |nu| <= 200, got " + std::to_string(nu));
    }
}

bool BesselOrder::is_integer() const noexcept { return nu_ == std::floor(nu_); }

bool BesselOrder::is_half_integer() const noexcept
{
    return !is_integer() && 2.0 * nu_ == std::floor(2.0 * nu_);
}

double sin_pi(double y) noexcept
{
    const double r = std::fmod(y, 2.0);
    if (r == std::floor(r)) {
        return 0.0;
    }
    if (2.0 * r == std::floor(2.0 * r)) {
        return (r == 0.5 || r == -1.5) ? 1.0 : -1.0;
    }
    return std::sin(std::numbers::pi * r);
}

double cos_pi(double y) noexcept
{
    const double r = std::fmod(std::abs(y), 2.0);
    if (r == std::floor(r)) {
        return r == 0.0 ? 1.0 : -1.0;
    }
    if (2.0 * r == std::floor(2.0 * r)) {
        return 0.0;
    }
    return std::cos(std::numbers::pi * r);
}

BesselValue eval_J(BesselOrder order, double x, const EvalOptions& opts)
{
    validate_argument(x);
    const double nu = order.value();
    if (x == 0.0) {
        if (nu < 0.0) {
            fail(ErrorKind::DomainError, "J_nu(0) is undefined for negative order");
        }
        return {0.0, nu == 0.0 ? 1.0 : 0.0, 0.0, 1, EvalMethod::Closed};
    }
    if (order.is_integer() && nu < 0.0) {
        const auto v = eval_J(order.negated(), x, opts);
        return (static_cast<long long>(-nu) % 2 == 0) ? v : negate(v);
    }
    if (series_in_reach(nu, x)) {
        if (auto v = j_series(nu, x, opts)) {
            return *v;
        }
    }
    if (nu >= 0.0) {
        const auto s = detail::steed_jy(nu, x);
        return from_steed(x, s.j, s);
    }
    const double mu = -nu;
    const auto s = detail::steed_jy(mu, x);
    return from_steed(x, cos_pi(mu) * s.j - sin_pi(mu) * s.y, s);
}

BesselValue eval_Y(BesselOrder order, double x, const EvalOptions& opts)
{
    if (!std::isfinite(x) || x <= 0.0) {
        fail(ErrorKind::DomainError, "Y_nu is singular at x <= 0");
    }
    const double nu = order.value();
    if (order.is_integer()) {
        const auto n = static_cast<int>(std::abs(nu));
        const auto v = y_integer(n, x, opts);
        return (nu < 0.0 && n % 2 != 0) ? negate(v) : v;
    }

    if (series_in_reach(nu, x)) {
        auto plus = j_series(nu, x, opts);
        auto minus = plus ? j_series(-nu, x, opts) : std::nullopt;
        if (plus && minus) {
            const double c = cos_pi(nu);
            const double s = sin_pi(nu);
            BesselValue out;
            out.x = x;
            out.value = checked((plus->value * c - minus->value) / s, "Y");
            out.abs_err_estimate = (plus->abs_err_estimate * std::abs(c) + minus->abs_err_estimate) / std::abs(s) +
                                   std::abs(out.value) * dbl_eps;
            out.terms_used = std::max(plus->terms_used, minus->terms_used);
            out.method = EvalMethod::Series;
            return out;
        }
    }
    const double mu = std::abs(nu);
    const auto s = detail::steed_jy(mu, x);
    if (nu > 0.0) {
        return from_steed(x, s.y, s);
    }
    return from_steed(x, sin_pi(mu) * s.j + cos_pi(mu) * s.y, s);
}

double bessel_j(double nu, double x, const EvalOptions& opts) { return eval_J(BesselOrder(nu), x, opts).value; }

double bessel_y(double nu, double x, const EvalOptions& opts) { return eval_Y(BesselOrder(nu), x, opts).value; }

double eval_J_derivative(BesselOrder nu, double x, const EvalOptions& opts)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "derivative requires x > 0");
    }
    const double lower = eval_J(nu.shifted(-1.0), x, opts).value;
    const double current = eval_J(nu, x, opts).value;
    return lower - (nu.value() / x) * current;
}

DerivativeForms derivative_forms(BesselOrder nu, double x, const EvalOptions& opts)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "derivative requires x > 0");
    }
    const double lower = eval_J(nu.shifted(-1.0), x, opts).value;
    const double current = eval_J(nu, x, opts).value;
    const double upper = eval_J(nu.shifted(1.0), x, opts).value;
    const double scaled = (nu.value() / x) * current;
    return {0.5 * (lower - upper), lower - scaled, scaled - upper};
}

double ratio_next_over_current(BesselOrder nu, double x, const EvalOptions& opts)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "ratio requires x > 0");
    }
    const double current = eval_J(nu, x, opts).value;
    const double next = eval_J(nu.shifted(1.0), x, opts).value;
    const double slope = (nu.value() / x) * current - next;

    // A simple zero z of J_nu sits about J/J' away; polish it before judging.
    if (slope != 0.0 && std::abs(current / slope) < 1e-6) {
        double z = x;
        for (int it = 0; it < 20; ++it) {
            const double jz = eval_J(nu, z, opts).value;
            const double dz = eval_J_derivative(nu, z, opts);
            if (dz == 0.0) {
                break;
            }
            const double step = jz / dz;
            z -= step;
            if (std::abs(step) <= 4.0 * dbl_eps * std::abs(z)) {
                break;
            }
        }
        if (std::abs(x - z) < 1e-8) {
            fail(ErrorKind::NearPole, "x = " + std::to_string(x) + " lies within 1e-8 of a zero of J_nu");
        }
    }
    if (current == 0.0) {
        fail(ErrorKind::NearPole, "J_nu vanishes at x");
    }
    return next / current;
}

LommelResiduals lommel_residuals(BesselOrder nu, double x, const EvalOptions& opts)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "Lommel residuals require x > 0");
    }
    const double v = nu.value();
    const double j_prev = eval_J(nu.shifted(-1.0), x, opts).value;
    const double j_neg = eval_J(nu.negated(), x, opts).value;
    const double j_cur = eval_J(nu, x, opts).value;
    const double j_neg_next = eval_J(BesselOrder(1.0 - v), x, opts).value;
    const double cross = j_prev * j_neg + j_cur * j_neg_next - 2.0 * sin_pi(v) / (std::numbers::pi * x);

    const double y_cur = eval_Y(nu, x, opts).value;
    const double y_next = eval_Y(nu.shifted(1.0), x, opts).value;
    const double j_next = eval_J(nu.shifted(1.0), x, opts).value;
    const double wronskian = y_cur * j_next - y_next * j_cur - 2.0 / (std::numbers::pi * x);
    return {std::abs(cross), std::abs(wronskian)};
}

double bowman_solution(const BowmanParams& p, double x, const EvalOptions& opts)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "Bowman solution requires x > 0");
    }
    if (!(p.beta > 0.0)) {
        fail(ErrorKind::DomainError, "Bowman solution requires beta > 0");
    }
    const BesselOrder m(p.m);
    const double z = p.beta * std::pow(x, p.gamma_exp);
    double inner = 0.0;
    if (p.A != 0.0) {
        inner += p.A * eval_J(m, z, opts).value;
    }
    if (p.B != 0.0) {
        const double second = m.is_integer() ? eval_Y(m, z, opts).value : eval_J(m.negated(), z, opts).value;
        inner += p.B * second;
    }
    return std::pow(x, p.alpha) * inner;
}

double bowman_operator(const BowmanParams& p, double x, double y, double dy, double d2y)
{
    const double g = p.gamma_exp;
    const double potential = p.beta * p.beta * g * g * std::pow(x, 2.0 * g - 2.0) +
                             (p.alpha * p.alpha - p.m * p.m * g * g) / (x * x);
    return d2y - (2.0 * p.alpha - 1.0) / x * dy + potential * y;
}

} // namespace besselbound
