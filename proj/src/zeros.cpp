#include "besselbound/zeros.hpp"

#include "besselbound/errors.hpp"
#include "besselbound/root_finding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace besselbound {

namespace {

constexpr double scan_step = 0.5;
constexpr double max_gap_between_zeros = 10.0 * std::numbers::pi;
constexpr double near_pole = 1e-8;

std::atomic<bool> cache_on{true};
std::mutex cache_mutex;
std::map<double, std::vector<double>> cache;

bool mcmahon_settled(double nu, int k)
{
    const double b8 = 8.0 * (k + 0.5 * nu - 0.25) * std::numbers::pi;
    const double mu = 4.0 * nu * nu;
    return std::abs(4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8)) < 0.05;
}

double polish_zero(double nu, double lo, double hi)
{
    const BesselOrder order(nu);
    auto f = [&](double x) { return eval_J(order, x).value; };
    auto df = [&](double x) { return eval_J_derivative(order, x); };
    return refine_root(f, df, lo, hi).root;
}

/// Extends `zeros` (ascending zeros of J_nu, nu > -1) to `count` entries.
void extend_zeros(double nu, std::vector<double>& zeros, int count)
{
    const BesselOrder order(nu);
    auto sign_at = [&](double x) { return eval_J(order, x).value; };

    while (static_cast<int>(zeros.size()) < count) {
        double a;
        if (zeros.empty()) {
            // No zero of J_nu lies below max(nu, 0) and J_nu > 0 there.
            a = nu > 0.0 ? nu : 1e-8;
        } else {
            a = zeros.back() + 1e-6;
        }
        double fa = sign_at(a);
        const double limit = a + max_gap_between_zeros + (zeros.empty() ? 2.0 * std::abs(nu) : 0.0);
        bool found = false;
        while (a < limit) {
            const double b = a + scan_step;
            const double fb = sign_at(b);
            if (fa == 0.0) {
                zeros.push_back(a);
                found = true;
                break;
            }
            if ((fa < 0.0) != (fb < 0.0)) {
                zeros.push_back(polish_zero(nu, a, b));
                found = true;
                break;
            }
            a = b;
            fa = fb;
        }
        if (!found) {
            fail(ErrorKind::BracketFailure, "no sign change of J_" + std::to_string(nu) + " found after x = " +
                                                std::to_string(zeros.empty() ? 0.0 : zeros.back()));
        }
        const int k = static_cast<int>(zeros.size());
        // Where the McMahon expansion has settled, a seed far from the located
        // zero means a zero was skipped.
        if (k >= 3 && mcmahon_settled(nu, k) && std::abs(zeros.back() - mcmahon_zero(nu, k)) > 0.5 * std::numbers::pi) {
            fail(ErrorKind::BracketFailure, "zero scan lost track of the McMahon sequence for J_" + std::to_string(nu));
        }
    }
}

double effective_order(double nu)
{
    // J_{-1} = -J_1 has the same positive zeros.
    return nu == -1.0 ? 1.0 : nu;
}

} // namespace

double mcmahon_zero(double nu, int k)
{
    const double beta = (k + 0.5 * nu - 0.25) * std::numbers::pi;
    const double mu = 4.0 * nu * nu;
    const double b8 = 8.0 * beta;
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

double airy_floor(double nu, double a1) { return nu - a1 * std::cbrt(nu / 2.0); }

void set_zero_cache_enabled(bool enabled) { cache_on.store(enabled); }

bool zero_cache_enabled() { return cache_on.load(); }

void clear_zero_cache()
{
    std::lock_guard lock(cache_mutex);
    cache.clear();
}

std::vector<double> bessel_zeros(double nu, int count)
{
    if (count < 0) {
        fail(ErrorKind::InvalidInput, "zero count must be nonnegative");
    }
    const BesselOrder order(nu);
    if (order.value() < -1.0) {
        fail(ErrorKind::DomainError, "zeros are only supported for nu >= -1");
    }
    const double key = effective_order(order.value());
    if (!cache_on.load()) {
        std::vector<double> zeros;
        extend_zeros(key, zeros, count);
        return zeros;
    }
    std::lock_guard lock(cache_mutex);
    auto& zeros = cache[key];
    extend_zeros(key, zeros, count);
    return {zeros.begin(), zeros.begin() + count};
}

double bessel_zero(const ZeroRequest& req)
{
    if (req.k < 1) {
        fail(ErrorKind::InvalidInput, "zero index k must be >= 1");
    }
    return bessel_zeros(req.nu.value(), req.k).back();
}

double bessel_zero(double nu, int k) { return bessel_zero(ZeroRequest{BesselOrder(nu), k}); }

RatioSeries ratio_series(double nu, double x, int explicit_zeros)
{
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "ratio series requires x > 0");
    }
    if (explicit_zeros < 1) {
        fail(ErrorKind::InvalidInput, "ratio series needs at least one explicit zero");
    }
    const auto zeros = bessel_zeros(nu, explicit_zeros);
    for (double j : zeros) {
        if (std::abs(j - x) < near_pole) {
            fail(ErrorKind::NearPole, "x lies within 1e-8 of a zero of J_nu");
        }
    }
    double explicit_part = 0.0;
    // Smallest terms first.
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
        explicit_part += 2.0 * x / ((*it - x) * (*it + x));
    }

    // Beyond K: j_k ~ beta_k = (k + a) pi, a = nu/2 - 1/4, and
    // 1/(j^2 - x^2) = 1/beta^2 + ((4nu^2 - 1)/4 + x^2)/beta^4 + O(beta^-6).
    const double a = 0.5 * nu - 0.25;
    const double z = explicit_zeros + 1 + a;
    const double inv = 1.0 / z;
    const double sum_inv2 = inv + 0.5 * inv * inv + inv * inv * inv / 6.0 - std::pow(inv, 5) / 30.0;
    const double sum_inv4 = std::pow(inv, 3) / 3.0 + 0.5 * std::pow(inv, 4) + std::pow(inv, 5) / 3.0;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double c4 = 0.25 * (4.0 * nu * nu - 1.0) + x * x;
    const double tail = 2.0 * x * (sum_inv2 / pi2 + c4 * sum_inv4 / (pi2 * pi2));
    // Next order in 1/beta plus the Euler-Maclaurin remainder of sum_inv2.
    const double tail_error_bound =
        2.0 * x * (10.0 * (c4 * c4 + std::abs(nu * nu) * 10.0) * std::pow(inv, 5) / (5.0 * pi2 * pi2 * pi2) +
                   std::pow(inv, 7) / (42.0 * pi2));
    return {explicit_part + tail, explicit_part, tail, tail_error_bound, explicit_zeros};
}

CharRoot char_root(int n, double c)
{
    if (n < 2) {
        fail(ErrorKind::DimensionError, "characteristic root needs n >= 2");
    }
    if (!std::isfinite(c)) {
        fail(ErrorKind::InvalidInput, "right-hand constant must be finite");
    }
    if (c <= 0.0) {
        fail(ErrorKind::NoRootInInterval,
             "x J_{n/2}/J_{n/2-1} is positive on (0, j_{n/2-1,1}), so it never equals c <= 0");
    }
    const double nu = 0.5 * n - 1.0;
    const BesselOrder lower(nu);
    const BesselOrder upper(nu + 1.0);
    const double j1 = bessel_zero(nu, 1);

    // h = x J_{nu+1} - c J_nu has the same root as the quotient equation and no pole.
    auto h = [&](double x) { return x * eval_J(upper, x).value - c * eval_J(lower, x).value; };
    auto dh = [&](double x) {
        const double jl = eval_J(lower, x).value;
        const double ju = eval_J(upper, x).value;
        return (c - nu) * ju + (x - c * nu / x) * jl;
    };

    double lo = 1e-3 * j1;
    int shrink = 0;
    while (h(lo) >= 0.0) {
        lo /= 10.0;
        if (++shrink > 300) {
            fail(ErrorKind::BracketFailure, "could not find a left endpoint with negative sign");
        }
    }
    const auto refined = refine_root(h, dh, lo, j1);
    const double root = refined.root;
    const double residual = root * eval_J(upper, root).value / eval_J(lower, root).value - c;
    return {n, c, root, refined.lo, refined.hi, j1, residual};
}

AlphaConstant alpha_constant(int n, double tau0, int explicit_zeros)
{
    if (n < 2) {
        fail(ErrorKind::DimensionError, "alpha needs n >= 2");
    }
    const double nu = 0.5 * n - 1.0;
    const double j1 = bessel_zero(nu, 1);
    if (!(tau0 > 0.0) || !(tau0 < j1)) {
        fail(ErrorKind::DomainError,
             "tau0 must lie in (0, j_{n/2-1,1}) = (0, " + std::to_string(j1) + "), got " + std::to_string(tau0));
    }
    const double quotient = tau0 * ratio_next_over_current(BesselOrder(nu), tau0);
    const auto series = ratio_series(nu, tau0, explicit_zeros);
    const double series_value = tau0 * series.value;
    const double gap = std::abs(series_value - quotient) / std::max(std::abs(quotient), 1e-300);
    return {quotient, series_value, tau0 * series.tail, gap, series.zeros_used};
}

FreitasCheck freitas_ratio_check(int n)
{
    if (n < 3) {
        fail(ErrorKind::DimensionError, "the tau1/tau0 comparison needs n >= 3");
    }
    const double tau0 = char_root(n, n - 1.0).root;
    const double tau1 = char_root(n, 0.5 * (n - 2.0)).root;
    const double ratio_sq = (tau1 / tau0) * (tau1 / tau0);
    const double nd = n;
    const double floor = (nd + 1.0) * (nd + 1.0 - std::sqrt(4.0 * nd + 1.0)) / (nd * (nd - 1.0));
    const double strict_floor = (nd - 2.0) / (2.0 * (nd - 1.0));
    const bool dominates = nd * tau1 * tau1 / (nd - 2.0) > nd * tau0 * tau0 / (2.0 * (nd - 1.0));
    return {n, tau0, tau1, ratio_sq, floor, strict_floor, ratio_sq >= floor, tau1 < tau0, dominates};
}

} // namespace besselbound
