#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "esymdom/quadrature.hpp"

using namespace esymdom;

TEST_CASE("calibration integrals on the half line")
{
    SECTION("exp(-t) integrates to 1")
    {
        QuadratureProblem p;
        p.integrand = [](double t) { return std::exp(-t); };
        p.left_exponent = 0.0;
        p.right_exponent = 6.0; // decays faster than any power
        const QuadratureResult r = integrate_halfline(p);
        CHECK(std::fabs(r.value - 1.0) <= 1e-10);
        CHECK(r.evaluations <= 20000);
        CHECK(r.error_estimate <= std::max(p.abs_tol, p.rel_tol * r.value));
    }
    SECTION("1/(1+t)^2 integrates to 1")
    {
        QuadratureProblem p;
        p.integrand = [](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); };
        p.left_exponent = 0.0;
        p.right_exponent = 2.0;
        const QuadratureResult r = integrate_halfline(p);
        CHECK(std::fabs(r.value - 1.0) <= 1e-10);
        CHECK(r.evaluations <= 20000);
    }
    SECTION("squared-log kernel at s=2 gives (log 2)^2")
    {
        const double s = 2.0;
        QuadratureProblem p;
        p.integrand = [s](double t) {
            const double d = 1.0 + t;
            return std::log1p(t * (1.0 - s) * (1.0 - s) / (s * d * d)) / t;
        };
        p.left_exponent = 0.0;
        p.right_exponent = 2.0;
        const QuadratureResult r = integrate_halfline(p);
        const double want = std::log(2.0) * std::log(2.0);
        CHECK(std::fabs(r.value - want) <= 1e-9);
        CHECK(r.evaluations <= 20000);
    }
}

TEST_CASE("linearity under constant scaling")
{
    QuadratureProblem p;
    p.integrand = [](double t) { return std::exp(-t) * std::cos(t); };
    p.right_exponent = 6.0;
    const double base = integrate_halfline(p).value; // exact: 1/2
    for (double c : {2.0, 10.0}) {
        QuadratureProblem q = p;
        q.integrand = [c](double t) { return c * std::exp(-t) * std::cos(t); };
        const double scaled = integrate_halfline(q).value;
        CHECK(std::fabs(scaled - c * base) <= 2.0 * q.rel_tol * std::fabs(c * base));
    }
    CHECK(std::fabs(base - 0.5) <= 1e-9);
}

TEST_CASE("deterministic replays")
{
    QuadratureProblem p;
    p.integrand = [](double t) { return std::log1p(t) * std::pow(t, -1.5); };
    p.left_exponent = -0.5;
    p.right_exponent = 1.5;
    const QuadratureResult a = integrate_halfline(p);
    const QuadratureResult b = integrate_halfline(p);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("power-weighted kernels reproduce the closed forms")
{
    const double pi = std::numbers::pi;
    SECTION("log(1+t) with alpha=1/2")
    {
        const QuadratureResult r = integrate_with_power_weight(
            [](double t) { return std::log1p(t); }, 0.5,
            PowerWeightKind::LogKernel);
        const double want = pi / (0.5 * std::sin(0.5 * pi)); // 2*pi
        CHECK(std::fabs(r.value - want) <= 1e-7 * want);
    }
    SECTION("log(1+2t) with alpha=1/2 scales to sqrt(2)")
    {
        const QuadratureResult r = integrate_with_power_weight(
            [](double t) { return std::log1p(2.0 * t); }, 0.5,
            PowerWeightKind::LogKernel);
        const double prefactor = 0.5 * std::sin(0.5 * pi) / pi;
        CHECK(std::fabs(prefactor * r.value - std::sqrt(2.0)) <= 1e-7);
    }
    SECTION("zero integrand")
    {
        const QuadratureResult r = integrate_with_power_weight(
            [](double) { return 0.0; }, 0.5, PowerWeightKind::LogKernel);
        CHECK(r.value == 0.0);
    }
    SECTION("compensated kernel with alpha=3/2 at s=1")
    {
        const QuadratureResult r = integrate_with_power_weight(
            [](double t) { return std::log1p(t) - t; }, 1.5,
            PowerWeightKind::CompensatedKernel);
        const double want = pi / (1.5 * std::sin(1.5 * pi)); // negative
        CHECK(std::fabs(r.value - want) <= 1e-7 * std::fabs(want));
    }
    SECTION("alpha range is enforced")
    {
        CHECK_THROWS_AS(integrate_with_power_weight([](double) { return 0.0; },
                                                     1.5,
                                                     PowerWeightKind::LogKernel),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            integrate_with_power_weight([](double) { return 0.0; }, 0.5,
                                        PowerWeightKind::CompensatedKernel),
            std::invalid_argument);
    }
}

TEST_CASE("non-convergence reports the best estimate")
{
    QuadratureProblem p;
    p.integrand = [](double t) { return 1.0 / (1e-4 + t * t); };
    p.left_exponent = 0.0;
    p.right_exponent = 2.0;
    p.max_depth = 3; // far too shallow for the sharp peak at 0
    p.abs_tol = 1e-12;
    p.rel_tol = 1e-12;
    try {
        (void)integrate_halfline(p);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(e.achieved_error >
              std::max(p.abs_tol, p.rel_tol * std::fabs(e.best_value)));
        CHECK(e.best_value > 0.0);
        CHECK(e.evaluations > 0);
    }
}

TEST_CASE("problem validation")
{
    QuadratureProblem p;
    p.integrand = [](double) { return 0.0; };
    p.left_exponent = -1.0;
    CHECK_THROWS_AS(integrate_halfline(p), std::invalid_argument);
    p.left_exponent = 0.0;
    p.right_exponent = 1.0;
    CHECK_THROWS_AS(integrate_halfline(p), std::invalid_argument);
    p.right_exponent = 2.0;
    p.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate_halfline(p), std::invalid_argument);
}
