// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fapchan/errors.hpp"
#include "fapchan/quadrature.hpp"

using namespace fapchan;

namespace {
constexpr double kPi = std::numbers::pi;

double cauchy10(double n)
{
    return 10.0 / (kPi * (n * n + 100.0));
}
} // namespace

TEST_CASE("config validation allows exactly the sane tolerance combinations")
{
    CHECK_NOTHROW(QuadConfig{}.validate());
    CHECK_NOTHROW(QuadConfig{0.0, 1e-8, 2000}.validate());
    CHECK_NOTHROW(QuadConfig{1e-10, 0.0, 2000}.validate());
    CHECK_THROWS_AS(QuadConfig({0.0, 0.0, 2000}).validate(), std::domain_error);
    CHECK_THROWS_AS(QuadConfig({-1e-10, 1e-8, 2000}).validate(), std::domain_error);
    CHECK_THROWS_AS(QuadConfig({1e-10, -1e-8, 2000}).validate(), std::domain_error);
    CHECK_THROWS_AS(QuadConfig({1e-10, 1e-8, 0}).validate(), std::domain_error);
}

TEST_CASE("polynomials up to the embedded rule's degree are exact on [0,1]")
{
    auto mono = [](int k) {
        return [k](double x) {
            double r = 1.0;
            for (int i = 0; i < k; ++i)
                r *= x;
            return r;
        };
    };
    for (int k : {2, 5, 9, 13}) {
        const QuadResult r = integrate(mono(k), 0.0, 1.0);
        CHECK(r.converged);
        CHECK(std::fabs(r.value - 1.0 / (k + 1)) <= 1e-13);
    }
}

TEST_CASE("converged results honour their own error-estimate contract")
{
    const QuadConfig cfg;
    for (const QuadResult& r : {integrate([](double x) { return std::sin(x); }, 0.0, 3.0, cfg),
                                integrate(cauchy10, -40.0, 40.0, cfg),
                                integrate_semi_infinite([](double x) { return std::exp(-x * x); },
                                                        0.0, cfg)}) {
        REQUIRE(r.converged);
        CHECK(r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(r.value)));
        CHECK(r.error_estimate >= 0.0);
    }
}

TEST_CASE("the heavy-tailed density integrates to one across a split domain")
{
    const double core = integrate(cauchy10, -100.0, 100.0).value;
    const double tails = 2.0 * integrate_semi_infinite(cauchy10, 100.0).value;
    CHECK(std::fabs(core + tails - 1.0) <= 1e-8);
}

TEST_CASE("semi-infinite transform reproduces closed-form exponential moments")
{
    const QuadResult total = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    REQUIRE(total.converged);
    CHECK(std::fabs(total.value - 1.0) <= 1e-10);

    const QuadResult mean =
        integrate_semi_infinite([](double x) { return x * std::exp(-x); }, 0.0);
    REQUIRE(mean.converged);
    CHECK(std::fabs(mean.value - 1.0) <= 1e-8);

    const QuadResult gauss =
        integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0);
    REQUIRE(gauss.converged);
    CHECK(std::fabs(gauss.value - std::sqrt(kPi) / 2.0) <= 1e-10);
}

TEST_CASE("one-sided heavy-tail mass from the scale point is a quarter")
{
    const QuadResult r = integrate_semi_infinite(cauchy10, 10.0);
    REQUIRE(r.converged);
    CHECK(std::fabs(r.value - 0.25) <= 1e-8);
}

TEST_CASE("nonzero offsets of the semi-infinite map are handled")
{
    // integral_5^inf e^{-x} dx = e^{-5}
    const QuadResult r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 5.0);
    REQUIRE(r.converged);
    CHECK(std::fabs(r.value - std::exp(-5.0)) <= 1e-10 * std::exp(-5.0) + 1e-12);
}

TEST_CASE("running out of subdivisions is reported, never silently accepted")
{
    QuadConfig cfg;
    cfg.max_subdivisions = 1;
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-14;
    const QuadResult r = integrate([](double x) { return std::sin(100.0 * x); }, 0.0, 10.0, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.subdivisions >= 1);
    CHECK_THROWS_AS(require_converged(r, "test"), NumericalError);

    const QuadResult ok = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(require_converged(ok, "test") == ok.value);
}

TEST_CASE("non-finite integrand values raise a numerical error")
{
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                              0.0, 1.0),
                    NumericalError);
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::infinity(); },
                              0.0, 1.0),
                    NumericalError);
}

TEST_CASE("invalid intervals are rejected up front")
{
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(integrate(f, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(integrate(f, 0.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(integrate(f, std::numeric_limits<double>::quiet_NaN(), 1.0),
                    std::domain_error);
}

TEST_CASE("single-sided tolerance configurations converge")
{
    QuadConfig abs_only;
    abs_only.abs_tol = 1e-9;
    abs_only.rel_tol = 0.0;
    CHECK(std::fabs(integrate(cauchy10, -10.0, 10.0, abs_only).value - 0.5) <= 1e-8);

    QuadConfig rel_only;
    rel_only.abs_tol = 0.0;
    rel_only.rel_tol = 1e-10;
    CHECK(std::fabs(integrate(cauchy10, -10.0, 10.0, rel_only).value - 0.5) <= 1e-9);
}
