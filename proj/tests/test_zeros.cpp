#include "doctest.h"

#include "besselbound/errors.hpp"
#include "besselbound/zeros.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <future>
#include <numbers>
#include <vector>

using namespace besselbound;

namespace {

// Root of x J_{n/2}(x) - c J_{n/2-1}(x) on (lo, hi) from Boost's Bessel functions and TOMS 748.
double boost_char_root(int n, double c, double lo, double hi)
{
    const double nu = 0.5 * n;
    auto h = [&](double x) {
        return x * boost::math::cyl_bessel_j(nu, x) - c * boost::math::cyl_bessel_j(nu - 1.0, x);
    };
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(h, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (r.first + r.second);
}

double trig_root(double (*f)(double), double lo, double hi)
{
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (r.first + r.second);
}

} // namespace

TEST_CASE("zeros match Boost for integer and fractional orders")
{
    double worst = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.5, 6.0, 10.0, 0.3, 17.25}) {
        const auto zs = bessel_zeros(nu, 20);
        REQUIRE(zs.size() == 20);
        for (int k = 1; k <= 20; ++k) {
            const double want = boost::math::cyl_bessel_j_zero(nu, k);
            worst = std::max(worst, std::abs(zs[k - 1] - want) / want);
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("order -1 shares the zeros of order 1")
{
    CHECK(bessel_zero(-1.0, 1) == doctest::Approx(bessel_zero(1.0, 1)).epsilon(1e-15));
    CHECK(bessel_zero(-0.5, 1) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
    CHECK(bessel_zero(ZeroRequest{BesselOrder(0.5), 3}) == doctest::Approx(3.0 * std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("McMahon expansion approaches the zeros")
{
    for (double nu : {0.0, 1.0, 2.5}) {
        const double j = bessel_zero(nu, 30);
        CHECK(std::abs(mcmahon_zero(nu, 30) - j) < 1e-5);
    }
}

TEST_CASE("Airy floor bounds the first zero from below")
{
    for (double nu = 0.5; nu <= 100.0; nu += 3.5) {
        const double j = bessel_zero(nu, 1);
        CHECK(airy_floor(nu) < j);
        CHECK(airy_floor(nu) > nu);
    }
}

TEST_CASE("cache does not change results and is safe across threads")
{
    clear_zero_cache();
    set_zero_cache_enabled(false);
    const double cold = bessel_zero(7.5, 4);
    set_zero_cache_enabled(true);
    CHECK(zero_cache_enabled());
    const double warm1 = bessel_zero(7.5, 4);
    const double warm2 = bessel_zero(7.5, 4);
    CHECK(cold == warm1);
    CHECK(warm1 == warm2);

    std::vector<std::future<double>> jobs;
    for (int t = 0; t < 4; ++t) {
        jobs.push_back(std::async(std::launch::async, [t] { return bessel_zeros(3.0 + 0.5 * t, 15).back(); }));
    }
    for (int t = 0; t < 4; ++t) {
        CHECK(jobs[t].get() == doctest::Approx(boost::math::cyl_bessel_j_zero(3.0 + 0.5 * t, 15)).epsilon(1e-12));
    }
}

TEST_CASE("zero request errors")
{
    CHECK_THROWS_AS(bessel_zero(1.0, 0), Error);
    CHECK_THROWS_AS(bessel_zero(-1.5, 1), Error);
    CHECK_THROWS_AS(bessel_zeros(1.0, -1), Error);
    CHECK(bessel_zeros(1.0, 0).empty());
}

TEST_CASE("zero series reproduces the direct quotient")
{
    for (double nu : {0.0, 0.5, 1.5, 3.0}) {
        for (double x : {0.3, 1.2, 2.0}) {
            const auto s = ratio_series(nu, x);
            const double direct = boost::math::cyl_bessel_j(nu + 1.0, x) / boost::math::cyl_bessel_j(nu, x);
            CHECK(s.value == doctest::Approx(direct).epsilon(1e-10));
            CHECK(s.zeros_used == 200);
            CHECK(s.explicit_part + s.tail == doctest::Approx(s.value).epsilon(1e-15));
            CHECK(s.tail_error_bound >= 0.0);
        }
    }
}

TEST_CASE("n = 3 characteristic roots reduce to trigonometric equations")
{
    // c = 2: tan x = -x on (pi/2, pi).
    const double t0 = trig_root([](double x) { return std::tan(x) + x; }, 1.6, 3.1);
    CHECK(std::abs(char_root(3, 2.0).root - t0) < 1e-9);
    CHECK(char_root(3, 2.0).root == doctest::Approx(2.028757838110434).epsilon(1e-10));
    // c = 1/2: tan x = 2x on (0, pi/2).
    const double t1 = trig_root([](double x) { return std::tan(x) - 2.0 * x; }, 0.5, 1.5);
    CHECK(std::abs(char_root(3, 0.5).root - t1) < 1e-9);
    // c = 1: cos x = 0.
    CHECK(std::abs(char_root(3, 1.0).root - std::numbers::pi / 2.0) < 1e-9);
}

TEST_CASE("characteristic roots for even n agree with a Boost root solve")
{
    for (int n : {2, 4, 6}) {
        for (double c : {0.05, 0.7, 3.0, 25.0}) {
            const auto r = char_root(n, c);
            const double j = boost::math::cyl_bessel_j_zero(0.5 * n - 1.0, 1);
            CHECK(r.first_zero == doctest::Approx(j).epsilon(1e-13));
            CHECK(r.bracket_lo <= r.root);
            CHECK(r.root <= r.bracket_hi);
            CHECK(std::abs(r.residual) < 1e-10 * std::max(1.0, c));
            CHECK(r.root == doctest::Approx(boost_char_root(n, c, 1e-9, j * (1.0 - 1e-12))).epsilon(1e-11));
        }
    }
}

TEST_CASE("characteristic root increases with c and tends to the first zero")
{
    double prev = 0.0;
    for (double c : {0.01, 0.1, 1.0, 10.0, 100.0, 1e4}) {
        const double r = char_root(4, c).root;
        CHECK(r > prev);
        prev = r;
    }
    CHECK(prev < bessel_zero(1.0, 1));
    CHECK(prev > bessel_zero(1.0, 1) - 1e-3);
}

TEST_CASE("characteristic root errors")
{
    try {
        char_root(3, 0.0);
        FAIL("expected NoRootInInterval");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoRootInInterval);
    }
    CHECK_THROWS_AS(char_root(1, 1.0), Error);
}

TEST_CASE("alpha constant: direct quotient and zero series agree")
{
    for (int n : {3, 4, 7}) {
        const double tau0 = 0.8 * bessel_zero(0.5 * n - 1.0, 1);
        const auto a = alpha_constant(n, tau0);
        const double direct = tau0 * boost::math::cyl_bessel_j(0.5 * n, tau0) /
                              boost::math::cyl_bessel_j(0.5 * n - 1.0, tau0);
        CHECK(a.value == doctest::Approx(direct).epsilon(1e-12));
        CHECK(a.relative_gap < 1e-9);
    }
}

TEST_CASE("Dirac and Yamabe roots: ratio floor and dominance for n = 3..200")
{
    for (int n = 3; n <= 200; ++n) {
        const auto f = freitas_ratio_check(n);
        CHECK(f.pass);
        CHECK(f.tau1_below_tau0);
        CHECK(f.conformal_dominates);
        CHECK(f.ratio_sq > f.strict_floor);
        CHECK(f.tau0 == doctest::Approx(char_root(n, n - 1.0).root).epsilon(1e-15));
        CHECK(f.tau1 == doctest::Approx(char_root(n, 0.5 * (n - 2.0)).root).epsilon(1e-15));
    }
}
