#include "doctest.h"

#include "besselbound/bounds.hpp"
#include "besselbound/errors.hpp"
#include "besselbound/zeros.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <functional>
#include <numbers>

using namespace besselbound;

namespace {

constexpr double pi = std::numbers::pi;

GeometrySpec geo(int n, double H0) { return GeometrySpec{n, H0, 0.0, {}}; }

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidInput;
}

// tau0 = 2.028757838..., tau1 = 1.165561185...: roots of tan x = -x and tan x = 2x.
const double tau0_3 = 2.028757838110434;
const double tau1_3 = 1.165561185207211;

} // namespace

TEST_CASE("quotient bound: trigonometric case and small-lambda limit")
{
    const auto r = quotient_lower_bound(geo(3, 1.0), 1.0);
    REQUIRE(r.value);
    CHECK(*r.value == doctest::Approx(std::sin(1.0) / (std::sin(1.0) - std::cos(1.0))).epsilon(1e-12));
    CHECK(r.informative);
    CHECK(!r.equality_case.empty());
    CHECK(r.hypotheses_hold());

    for (int n : {2, 3, 5, 8}) {
        for (double H0 : {0.5, 1.0, 2.0}) {
            CHECK(std::abs(*quotient_lower_bound(geo(n, H0), 1e-8).value - n * H0) < 1e-3);
        }
    }
}

TEST_CASE("quotient bound past the zeros")
{
    const double j01 = boost::math::cyl_bessel_j_zero(0.0, 1);
    const auto before = quotient_lower_bound(geo(2, 1.0), j01 * j01 - 1e-6);
    CHECK(before.informative);
    CHECK(*before.value > 0.0);
    CHECK(*before.value < 1e-5);

    const auto past = quotient_lower_bound(geo(2, 1.0), (j01 + 0.1) * (j01 + 0.1));
    CHECK(!past.informative);
    CHECK(*past.value < 0.0);
    CHECK(!past.warnings.empty());

    const double j11 = boost::math::cyl_bessel_j_zero(1.0, 1);
    CHECK(kind_of([&] { quotient_lower_bound(geo(2, 1.0), j11 * j11 * 1.01); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { quotient_lower_bound(geo(2, 1.0), -1.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("isoperimetric and Dirichlet bounds")
{
    CHECK(*isoperimetric_bound(geo(3, 2.0)).value == 6.0);
    CHECK(*isoperimetric_bound(geo(5, 0.5)).value == 2.5);
    // Unit ball in R^3: area / volume = 4 pi / (4 pi / 3).
    CHECK(*isoperimetric_bound(geo(3, 1.0)).value == doctest::Approx(4.0 * pi / (4.0 * pi / 3.0)));

    CHECK(*dirichlet_faber_krahn(geo(3, 1.0)).value == doctest::Approx(pi * pi).epsilon(1e-14));
    const double j01 = boost::math::cyl_bessel_j_zero(0.0, 1);
    CHECK(*dirichlet_faber_krahn(geo(2, 1.0)).value == doctest::Approx(j01 * j01).epsilon(1e-14));
    CHECK(*dirichlet_faber_krahn(geo(3, 2.0)).value == doctest::Approx(4.0 * pi * pi).epsilon(1e-14));
}

TEST_CASE("geometry validation")
{
    CHECK(kind_of([] { dirichlet_faber_krahn(geo(1, 1.0)); }) == ErrorKind::DimensionError);
    CHECK(kind_of([] { dirichlet_faber_krahn(geo(3, 0.0)); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { dirichlet_faber_krahn(GeometrySpec{3, 1.0, 1.0, {}}); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { dirichlet_faber_krahn(GeometrySpec{3, 1.0, 0.0, 2.0}); }) == ErrorKind::DomainError);
}

TEST_CASE("Robin threshold bound")
{
    const auto eq = robin_threshold_bound(geo(3, 1.0), 1.0, pi / 2.0);
    REQUIRE(eq.value);
    CHECK(eq.intermediates.at("alpha") == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(*eq.value == doctest::Approx(pi * pi / 4.0).epsilon(1e-14));
    CHECK(eq.hypotheses_hold());

    const auto low = robin_threshold_bound(geo(3, 1.0), 0.5, pi / 2.0);
    CHECK(!low.value);
    CHECK(!low.hypotheses_hold());

    const auto tiny = robin_threshold_bound(geo(3, 1.0), 1.0, 1e-4);
    CHECK(*tiny.value < 1e-7);
    CHECK(tiny.intermediates.at("alpha") < 1e-7);
}

TEST_CASE("Robin ball eigenvalue")
{
    const auto r = robin_ball_eigenvalue(3, 1.0, 1.0);
    CHECK(*r.value == doctest::Approx(pi * pi / 4.0).epsilon(1e-12));
    const auto big = robin_ball_eigenvalue(3, 1.0, 1e6);
    CHECK(big.intermediates.at("root") > pi - 1e-2);
    CHECK(*big.value < pi * pi);

    double prev = 0.0;
    for (double tau : {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0}) {
        const double v = *robin_ball_eigenvalue(3, 1.0, tau).value;
        CHECK(v > prev);
        CHECK(v < *dirichlet_faber_krahn(geo(3, 1.0)).value);
        prev = v;
    }
    // Scaling: a ball of radius 1/H0 with tau has eigenvalue H0^2 times the unit ball with tau/H0.
    CHECK(*robin_ball_eigenvalue(4, 2.0, 3.0).value ==
          doctest::Approx(4.0 * *robin_ball_eigenvalue(4, 1.0, 1.5).value).epsilon(1e-12));
    CHECK(kind_of([] { robin_ball_eigenvalue(3, 1.0, 0.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("threshold bound seeded by the ball root reproduces the ball eigenvalue")
{
    for (int n : {2, 3, 4, 6}) {
        for (double tau : {0.1, 1.0, 10.0}) {
            const auto ball = robin_ball_eigenvalue(n, 1.0, tau);
            const auto t = robin_threshold_bound(geo(n, 1.0), tau, ball.intermediates.at("root"));
            REQUIRE(t.value);
            CHECK(std::abs(*t.value - *ball.value) <= 1e-9 * *ball.value);
            CHECK(t.intermediates.at("alpha") == doctest::Approx(tau).epsilon(1e-9));
        }
    }
}

TEST_CASE("Dirac, MIT, Yamabe and conformal Dirac bounds")
{
    const auto d = dirac_bound(geo(3, 1.0), {});
    CHECK(*d.value == doctest::Approx(0.75 * tau0_3 * tau0_3).epsilon(1e-12));
    CHECK(*d.value == doctest::Approx(3.08690).epsilon(1e-5));
    CHECK(d.strict);

    CurvatureInputs friedrich;
    friedrich.min_scalar = 4.0;
    CHECK(*dirac_bound(geo(3, 1e-6), friedrich).value == doctest::Approx(1.5).epsilon(1e-9));

    const double t04 = char_root(4, 3.0).root;
    CHECK(*dirac_bound(geo(4, 1.0), {}).value == doctest::Approx(4.0 / 6.0 * t04 * t04).epsilon(1e-14));

    CurvatureInputs mit;
    mit.im_lambda = 0.5;
    CHECK(*mit_bound(geo(3, 1.0), mit).value == doctest::Approx(1.5));
    mit.im_lambda = 0.0;
    mit.min_scalar = 6.0;
    CHECK(*mit_bound(geo(3, 1.0), mit).value == doctest::Approx(2.25));
    mit.min_scalar = 0.0;
    mit.im_lambda = 1.0;
    CHECK(*mit_bound(geo(5, 2.0), mit).value == doctest::Approx(10.0));
    mit.im_lambda = -1.0;
    CHECK(kind_of([&] { mit_bound(geo(3, 1.0), mit); }) == ErrorKind::InvalidInput);

    CHECK(*yamabe_bound(geo(3, 1.0), {}).value == doctest::Approx(8.0 * tau1_3 * tau1_3).epsilon(1e-12));
    CHECK(*yamabe_bound(geo(3, 1.0), {}).value == doctest::Approx(10.8683).epsilon(1e-5));
    CurvatureInputs one;
    one.min_scalar = 1.0;
    const double t14 = char_root(4, 1.0).root;
    CHECK(*yamabe_bound(geo(4, 1.0), one).value == doctest::Approx(1.0 + 6.0 * t14 * t14).epsilon(1e-14));
    CHECK(*yamabe_bound(geo(3, 1e-6), one).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(kind_of([] { yamabe_bound(geo(2, 1.0), {}); }) == ErrorKind::DimensionError);

    const auto c = dirac_conformal_bound(geo(3, 1.0), {});
    CHECK(*c.value == doctest::Approx(3.0 * tau1_3 * tau1_3).epsilon(1e-12));
    CHECK(*c.value > *d.value);
    CurvatureInputs negative;
    negative.min_scalar = -1.0;
    const auto cn = dirac_conformal_bound(geo(3, 1.0), negative);
    CHECK(*cn.value == doctest::Approx(-0.375 + 3.0 * tau1_3 * tau1_3).epsilon(1e-12));
    CHECK(cn.informative);
    CurvatureInputs eight_thirds;
    eight_thirds.min_scalar = 8.0 / 3.0;
    CHECK(*dirac_conformal_bound(geo(3, 1e-6), eight_thirds).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("p-form bounds")
{
    CurvatureInputs cur;
    cur.p = 1;
    cur.sigma_p = 1.0;
    cur.tau = 1.0;
    const auto r = pform_bound(geo(3, 1.0), cur, pi / 2.0);
    REQUIRE(r.value);
    CHECK(*r.value == doctest::Approx(pi * pi / 8.0).epsilon(1e-14));
    CHECK(r.intermediates.at("threshold") == doctest::Approx(-0.5).epsilon(1e-12));

    CurvatureInputs two;
    two.p = 2;
    two.sigma_p = 2.0;
    two.tau = 1.0;
    const auto r2 = pform_bound(geo(4, 1.0), two, 1.0);
    CHECK(*r2.value == doctest::Approx(0.5));
    const double alpha = boost::math::cyl_bessel_j(2.0, 1.0) / boost::math::cyl_bessel_j(1.0, 1.0);
    CHECK(r2.intermediates.at("threshold") == doctest::Approx(2.0 * (alpha / 4.0 - 1.0)).epsilon(1e-12));

    cur.tau = -1.0;
    CHECK(!pform_bound(geo(3, 1.0), cur, pi / 2.0).value);
    cur.sigma_p = -1.0;
    CHECK(kind_of([&] { pform_bound(geo(3, 1.0), cur, pi / 2.0); }) == ErrorKind::DomainError);

    CurvatureInputs ball;
    ball.p = 1;
    ball.sigma_p = 1.0;
    ball.tau = 1.0;
    CHECK(*pform_ball_comparison(geo(3, 1.0), ball).value == doctest::Approx(pi * pi / 8.0).epsilon(1e-12));
    ball.p = 2;
    ball.sigma_p = 2.0;
    CHECK(*pform_ball_comparison(geo(3, 1.0), ball).value == doctest::Approx(pi * pi / 8.0).epsilon(1e-12));
    ball.p = 1;
    ball.sigma_p = 1.0;
    CHECK(*pform_ball_comparison(geo(2, 1.0), ball).value ==
          doctest::Approx(0.5 * *robin_ball_eigenvalue(2, 1.0, 1.0).value).epsilon(1e-14));
}

TEST_CASE("gap bound")
{
    CurvatureInputs cur;
    cur.p = 2;
    cur.inf_W_minus_T = 3.0;
    CHECK(*gap_bound(cur).value == 1.5);
    cur.p = 1;
    cur.inf_W_minus_T = 0.0;
    const auto zero = gap_bound(cur);
    CHECK(*zero.value == 0.0);
    REQUIRE(!zero.warnings.empty());
    CHECK(zero.warnings[0].find("Euclidean p-convex") != std::string::npos);
    cur.p = 3;
    cur.inf_W_minus_T = -6.0;
    const auto neg = gap_bound(cur);
    CHECK(*neg.value == -2.0);
    CHECK(!neg.informative);
}

TEST_CASE("Gallot-Meyer bound")
{
    CurvatureInputs cur;
    cur.p = 2;
    cur.gamma = 1.0;
    cur.sigma_p = 0.0;
    cur.tau = 1.0;
    const auto a = gallot_meyer_bound(geo(4, 1.0), cur);
    CHECK(a.intermediates.at("c") == 3.0);
    CHECK(*a.value == doctest::Approx(6.0));

    CurvatureInputs b;
    b.p = 1;
    b.gamma = 1.0;
    b.sigma_p = 1.0;
    b.tau = 0.1;
    const auto r = gallot_meyer_bound(geo(3, 1.0), b);
    CHECK(r.intermediates.at("threshold") == doctest::Approx(-1.5));
    CHECK(r.intermediates.at("branch") == 1.0);
    CHECK(*r.value == doctest::Approx(3.0));

    // Second branch: tau < -c/(c-1) sigma_p.
    CurvatureInputs s;
    s.p = 1;
    s.gamma = 1.0;
    s.sigma_p = 1.0;
    s.tau = -3.5;
    s.nu_1p = 3.0;
    const auto r2 = gallot_meyer_bound(geo(3, 1.0), s);
    CHECK(r2.intermediates.at("branch") == 2.0);
    CHECK(*r2.value == doctest::Approx(1.0 * 2.0 * (3.0 - 3.5) / (2.0 / 3.0 * 3.0 - 1.0)));
    s.nu_1p = 1.0;
    CHECK(kind_of([&] { gallot_meyer_bound(geo(3, 1.0), s); }) == ErrorKind::DenominatorNonpositive);
    s.gamma = 0.0;
    CHECK(kind_of([&] { gallot_meyer_bound(geo(3, 1.0), s); }) == ErrorKind::DomainError);
}

TEST_CASE("cotangent bound")
{
    const auto r = cotangent_bound(1.0, 0.5);
    CHECK(*r.value == doctest::Approx(1.0 / std::tan(0.5)).epsilon(1e-14));
    const auto out = cotangent_bound(4.0, 1.0);
    CHECK(!out.value);
    CHECK(!out.hypotheses_hold());
}

TEST_CASE("hypotheses carry names and details")
{
    const auto r = quotient_lower_bound(geo(3, 1.0), 1.0);
    bool any_asserted = false;
    for (const auto& h : r.hypotheses) {
        CHECK(!h.name.empty());
        CHECK(!h.detail.empty());
        any_asserted = any_asserted || h.caller_asserted;
    }
    CHECK(any_asserted);
}
