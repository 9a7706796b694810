#include "doctest.h"

#include "besselbound/errors.hpp"
#include "besselbound/special_functions.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>

using namespace besselbound;

namespace {

constexpr double pi = std::numbers::pi;

double boost_j(double nu, double x) { return boost::math::cyl_bessel_j(nu, x); }
double boost_y(double nu, double x) { return boost::math::cyl_neumann(nu, x); }

// Relative error away from zeros, absolute error near them.
double mixed_error(double got, double want, double scale)
{
    return std::abs(got - want) / std::max(std::abs(want), scale);
}

} // namespace

TEST_CASE("J matches Boost over orders and arguments")
{
    double worst = 0.0;
    for (double nu : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.7, 5.0, 10.0, 25.5, 50.0}) {
        for (double x : {1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 3.3, 7.5, 12.0, 20.0, 35.0, 60.0, 100.0}) {
            const double want = boost_j(nu, x);
            if (std::abs(want) < 1e-250) {
                continue;
            }
            worst = std::max(worst, mixed_error(bessel_j(nu, x), want, 1e-3 * std::sqrt(2.0 / (pi * x))));
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("J of negative non-integer order matches Boost")
{
    double worst = 0.0;
    for (double nu : {-0.5, -1.5, -2.5, -0.3, -3.7}) {
        for (double x : {0.2, 1.0, 2.5, 6.0, 15.0, 40.0}) {
            const double want = boost_j(nu, x);
            worst = std::max(worst, mixed_error(bessel_j(nu, x), want, 1e-3 * std::sqrt(2.0 / (pi * x))));
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("J of negative integer order is (-1)^n J_n")
{
    for (int n = 1; n <= 6; ++n) {
        for (double x : {0.3, 2.0, 9.0}) {
            CHECK(bessel_j(-n, x) == doctest::Approx((n % 2 ? -1.0 : 1.0) * bessel_j(n, x)).epsilon(1e-14));
        }
    }
}

TEST_CASE("Y matches Boost")
{
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 7.0, 0.3}) {
        for (double x : {0.05, 0.5, 1.0, 2.0, 4.0, 9.0, 17.0, 40.0}) {
            const double want = boost_y(nu, x);
            worst = std::max(worst, mixed_error(bessel_y(nu, x), want, 1e-3 * std::sqrt(2.0 / (pi * x))));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("half-integer orders reduce to trigonometric forms")
{
    for (double x : {0.1, 0.9, 2.0, 5.5, 13.0, 29.0}) {
        const double env = std::sqrt(2.0 / (pi * x));
        CHECK(bessel_j(0.5, x) == doctest::Approx(env * std::sin(x)).epsilon(1e-12));
        CHECK(bessel_j(-0.5, x) == doctest::Approx(env * std::cos(x)).epsilon(1e-12));
        const double j15 = env * (std::sin(x) / x - std::cos(x));
        CHECK(std::abs(bessel_j(1.5, x) - j15) < 1e-12 * env * (1.0 + 1.0 / x));
        CHECK(bessel_y(0.5, x) == doctest::Approx(-env * std::cos(x)).epsilon(1e-12));
    }
}

TEST_CASE("small-argument behaviour")
{
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(2.0, 0.0) == 0.0);
    const double x = 1e-5;
    CHECK(bessel_j(3.0, x) == doctest::Approx(std::pow(x / 2.0, 3.0) / 6.0).epsilon(1e-9));
    CHECK(bessel_y(0.0, x) == doctest::Approx(2.0 / pi * (std::log(x / 2.0) + euler_gamma)).epsilon(1e-9));
}

TEST_CASE("eval_J reports its method and an error estimate")
{
    const auto small = eval_J(BesselOrder(1.0), 0.5);
    CHECK(small.method == EvalMethod::Series);
    CHECK(small.terms_used > 1);
    CHECK(small.abs_err_estimate >= 0.0);
    CHECK(small.abs_err_estimate < 1e-12);

    const auto large = eval_J(BesselOrder(1.0), 80.0);
    CHECK(large.method == EvalMethod::ContinuedFraction);
    CHECK(large.value == doctest::Approx(boost_j(1.0, 80.0)).epsilon(1e-11));
}

TEST_CASE("a looser series tolerance uses fewer terms")
{
    EvalOptions loose;
    loose.rel_tol = 1e-4;
    const auto a = eval_J(BesselOrder(2.0), 3.0, loose);
    const auto b = eval_J(BesselOrder(2.0), 3.0);
    CHECK(a.terms_used < b.terms_used);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-4));
}

TEST_CASE("Steed continued fractions against Boost")
{
    for (double nu : {0.0, 0.4, 1.0, 3.5, 12.0}) {
        for (double x : {2.0, 5.0, 30.0}) {
            const auto s = detail::steed_jy(nu, x);
            CHECK(s.j == doctest::Approx(boost_j(nu, x)).epsilon(1e-11));
            CHECK(s.y == doctest::Approx(boost_y(nu, x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("derivative forms agree with a Boost finite difference")
{
    for (double nu : {0.0, 0.5, 1.0, 2.5, 4.0}) {
        for (double x : {0.7, 2.0, 6.3}) {
            const double h = 1e-5;
            const double fd = (boost_j(nu, x + h) - boost_j(nu, x - h)) / (2.0 * h);
            const auto f = derivative_forms(BesselOrder(nu), x);
            CHECK(f.central == doctest::Approx(fd).epsilon(1e-8));
            CHECK(f.lower == doctest::Approx(fd).epsilon(1e-8));
            CHECK(f.upper == doctest::Approx(fd).epsilon(1e-8));
            CHECK(eval_J_derivative(BesselOrder(nu), x) == doctest::Approx(f.lower).epsilon(1e-14));
        }
    }
}

TEST_CASE("Lommel and Wronskian residuals are tiny")
{
    for (double nu : {-2.5, -0.5, 0.0, 0.3, 1.0, 3.5, 8.0}) {
        for (double x : {0.1, 1.0, 10.0, 45.0}) {
            const auto r = lommel_residuals(BesselOrder(nu), x);
            CHECK(r.cross <= 1e-10 * std::max(1.0, 1.0 / x));
            CHECK(r.wronskian <= 1e-10 * std::max(1.0, 1.0 / x));
        }
    }
}

TEST_CASE("ratio J_{nu+1}/J_nu")
{
    CHECK(ratio_next_over_current(BesselOrder(0.5), 1.0) == doctest::Approx(1.0 / 1.0 - 1.0 / std::tan(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(ratio_next_over_current(BesselOrder(0.5), pi), Error);
    try {
        ratio_next_over_current(BesselOrder(0.5), pi);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NearPole);
    }
}

TEST_CASE("Bowman solutions satisfy their equation")
{
    const BowmanParams p{1.5, 2.0, 1.0, 1.5, 1.0, 0.7};
    for (double x : {0.5, 1.1, 2.4}) {
        const double h = 1e-4;
        const double ym = bowman_solution(p, x - h);
        const double y = bowman_solution(p, x);
        const double yp = bowman_solution(p, x + h);
        const double r = bowman_operator(p, x, y, (yp - ym) / (2.0 * h), (yp - 2.0 * y + ym) / (h * h));
        CHECK(std::abs(r) < 1e-5 * std::max(1.0, std::abs(y)));
    }
    // x^a J_m(b x) with a = 0, g = 1 is J_m itself.
    const BowmanParams plain{0.0, 1.0, 1.0, 2.0, 1.0, 0.0};
    CHECK(bowman_solution(plain, 3.0) == doctest::Approx(boost_j(2.0, 3.0)).epsilon(1e-12));
}

TEST_CASE("sin_pi and cos_pi are exact at half integers")
{
    CHECK(sin_pi(1.0) == 0.0);
    CHECK(sin_pi(1.5) == -1.0);
    CHECK(cos_pi(0.5) == 0.0);
    CHECK(cos_pi(2.0) == 1.0);
    CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("input errors")
{
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidInput;
    };
    CHECK(kind_of([] { BesselOrder(250.0); }) == ErrorKind::OrderOutOfRange);
    CHECK(kind_of([] { BesselOrder(std::nan("")); }) == ErrorKind::OrderOutOfRange);
    CHECK(kind_of([] { bessel_j(1.0, -1.0); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { bessel_y(0.0, 0.0); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { bessel_j(-0.5, 0.0); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { bessel_j(1.0, HUGE_VAL); }) == ErrorKind::DomainError);
}

TEST_CASE("BesselOrder classification")
{
    CHECK(BesselOrder(3.0).is_integer());
    CHECK(!BesselOrder(3.0).is_half_integer());
    CHECK(BesselOrder(-2.5).is_half_integer());
    CHECK(BesselOrder(1.5).shifted(1.0).value() == 2.5);
    CHECK(BesselOrder(1.5).negated().value() == -1.5);
}

TEST_CASE("reference values")
{
    const double pi_ = pi;
    CHECK(bessel_j(0.5, pi_ / 2.0) == doctest::Approx(2.0 / pi_).epsilon(1e-14));
    CHECK(bessel_j(-0.5, pi_) == doctest::Approx(-std::sqrt(2.0) / pi_).epsilon(1e-13));
    CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-10);
    CHECK(bessel_y(0.5, pi_) == doctest::Approx(std::sqrt(2.0) / pi_).epsilon(1e-13));

    const auto w = lommel_residuals(BesselOrder(2.0), 1.0);
    CHECK(w.wronskian < 1e-10);
    const auto h = lommel_residuals(BesselOrder(0.5), 1.0);
    CHECK(h.cross <= 1e-12);
    CHECK(h.wronskian <= 1e-12);

    const double j01 = boost::math::cyl_bessel_j_zero(0.0, 1);
    CHECK(eval_J_derivative(BesselOrder(0.0), j01) == doctest::Approx(-boost_j(1.0, j01)).epsilon(1e-12));
    CHECK(eval_J_derivative(BesselOrder(0.5), pi_) == doctest::Approx(-std::sqrt(2.0) / pi_).epsilon(1e-12));
    const double step = 1e-6;
    const double fd = (bessel_j(3.0, 5.0 + step) - bessel_j(3.0, 5.0 - step)) / (2.0 * step);
    CHECK(std::abs(eval_J_derivative(BesselOrder(3.0), 5.0) - fd) < 1e-7);

    CHECK(ratio_next_over_current(BesselOrder(0.0), 1e-4) == doctest::Approx(5e-5).epsilon(1e-8));
    CHECK(std::abs(ratio_next_over_current(BesselOrder(0.0), 1e-4) - 5e-5) < 1e-12);

    const BowmanParams half{0.5, 1.0, 1.0, 0.5, 1.0, 0.0};
    CHECK(bowman_solution(half, 1.0) == doctest::Approx(std::sqrt(2.0 / pi_) * std::sin(1.0)).epsilon(1e-13));
    const BowmanParams zero{1.5, 2.0, 1.0, 1.5, 0.0, 0.0};
    CHECK(bowman_solution(zero, 0.9) == 0.0);
}
