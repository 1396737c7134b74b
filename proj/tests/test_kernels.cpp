// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fapchan/bessel.hpp"
#include "fapchan/errors.hpp"
#include "fapchan/kernels.hpp"

using namespace fapchan;

namespace {
constexpr double kPi = std::numbers::pi;
const ChannelParams kDrifted{10.0, 200.0, 5.0};
const ChannelParams kZero{10.0, 200.0, 0.0};
} // namespace

TEST_CASE("parameter validation rejects non-physical channels")
{
    CHECK_NOTHROW(kDrifted.validate());
    CHECK_NOTHROW(kZero.validate());
    CHECK_THROWS_AS(ChannelParams({0.0, 200.0, 5.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(ChannelParams({-1.0, 200.0, 5.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(ChannelParams({10.0, 0.0, 5.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(ChannelParams({10.0, 200.0, -0.5}).validate(), std::domain_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ChannelParams({nan, 200.0, 5.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(ChannelParams({10.0, nan, 5.0}).validate(), std::domain_error);
    CHECK_THROWS_AS(ChannelParams({10.0, 200.0, nan}).validate(), std::domain_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ChannelParams({10.0, inf, 5.0}).validate(), std::domain_error);
    CHECK(ChannelParams({10.0, 200.0, 5.0}).diffusion() == 100.0);
}

TEST_CASE("critical scale is sigma^2 / v, infinite without drift")
{
    CHECK(critical_scale(kDrifted) == 40.0);
    CHECK(critical_scale({10.0, 200.0, 0.1}) == 2000.0);
    CHECK(std::isinf(critical_scale(kZero)));
}

TEST_CASE("the dimensionless argument uses the full radial distance")
{
    CHECK(z_argument(kDrifted, 0.0) == 0.25);
    // s = hypot(30, 10) = sqrt(1000)
    CHECK(std::fabs(z_argument(kDrifted, 30.0) - 5.0 * std::sqrt(1000.0) / 200.0) <= 3e-16);
    CHECK(z_argument(kDrifted, -30.0) == z_argument(kDrifted, 30.0));
    CHECK(z_argument(kZero, 30.0) == 0.0);
}

TEST_CASE("regime classification respects the z thresholds inclusively")
{
    CHECK(classify_regime(kDrifted, 0.0) == Regime::CauchyCore);   // z = 0.25
    CHECK(classify_regime(kDrifted, 40.0) == Regime::Transition);  // z ~ 1.03
    CHECK(classify_regime(kDrifted, 150.0) == Regime::ExponentialTail); // z ~ 3.76

    // Exactly on a boundary counts as the middle regime on both sides.
    const ChannelParams at_lo{10.0, 200.0, 6.0};  // z(0) = 0.3
    CHECK(classify_regime(at_lo, 0.0) == Regime::Transition);
    const ChannelParams at_hi{10.0, 200.0, 60.0}; // z(0) = 3.0
    CHECK(classify_regime(at_hi, 0.0) == Regime::Transition);
    const ChannelParams past_hi{10.0, 200.0, 60.2};
    CHECK(classify_regime(past_hi, 0.0) == Regime::ExponentialTail);

    CHECK_THROWS_AS(classify_regime(kZero, 0.0), ZeroDriftError);
    CHECK_THROWS_AS(classify_regime(kDrifted, 0.0, RegimeThresholds{0.0, 3.0}),
                    std::domain_error);
    CHECK_THROWS_AS(classify_regime(kDrifted, 0.0, RegimeThresholds{3.0, 0.3}),
                    std::domain_error);

    CHECK(regime_name(Regime::CauchyCore) == "CauchyCore");
    CHECK(regime_name(Regime::Transition) == "Transition");
    CHECK(regime_name(Regime::ExponentialTail) == "ExponentialTail");
}

TEST_CASE("tail decay rates: damped form twice as fast as the normalized one")
{
    CHECK(tail_decay_rate(kDrifted, Kernel::Exact) == 0.05);
    CHECK(tail_decay_rate(kDrifted, Kernel::Subordination) == 0.025);
    CHECK_THROWS_AS(tail_decay_rate(kDrifted, Kernel::CauchyLimit), std::domain_error);
    CHECK_THROWS_AS(tail_decay_rate(kDrifted, Kernel::CoreAsymptotic), std::domain_error);
    CHECK_THROWS_AS(tail_decay_rate(kZero, Kernel::Exact), std::domain_error);
}

TEST_CASE("zero-drift limit is the heavy-tailed scale-lambda density")
{
    CHECK(std::fabs(pdf(kZero, Kernel::CauchyLimit, 0.0) - 1.0 / (10.0 * kPi)) <= 5e-17);
    CHECK(std::fabs(pdf(kZero, Kernel::CauchyLimit, 10.0) - 1.0 / (20.0 * kPi)) <= 5e-17);
    CHECK(pdf(kZero, Kernel::CauchyLimit, -25.0) == pdf(kZero, Kernel::CauchyLimit, 25.0));
    // v is ignored by this kernel.
    CHECK(pdf(kDrifted, Kernel::CauchyLimit, 7.0) == pdf(kZero, Kernel::CauchyLimit, 7.0));
}

TEST_CASE("drifted kernels match their explicit formulas")
{
    for (double n : {0.0, 5.0, 40.0, 120.0}) {
        const double s = std::hypot(n, 10.0);
        const double z = 5.0 * s / 200.0;
        const double z0 = 0.25;
        const double sub = (5.0 * 10.0 / (kPi * 200.0)) * std::exp(z0) * bessel_k1(z) / s;
        CHECK(std::fabs(pdf(kDrifted, Kernel::Subordination, n) / sub - 1.0) <= 1e-13);
        CHECK(std::fabs(pdf(kDrifted, Kernel::Exact, n) / (sub * std::exp(-z)) - 1.0) <= 1e-13);

        // The damped and normalized forms differ by exactly the factor e^{-z}.
        const double diff = log_pdf(kDrifted, Kernel::Subordination, n)
                          - log_pdf(kDrifted, Kernel::Exact, n);
        CHECK(std::fabs(diff - z) <= 1e-12 * std::max(1.0, z));
    }
}

TEST_CASE("log pdf is even in n for every univariate kernel")
{
    for (Kernel k : {Kernel::Exact, Kernel::Subordination, Kernel::CauchyLimit,
                     Kernel::CoreAsymptotic, Kernel::TailAsymptotic}) {
        for (double n : {0.5, 13.0, 250.0})
            CHECK(log_pdf(kDrifted, k, n) == log_pdf(kDrifted, k, -n));
    }
}

TEST_CASE("core approximation equals the heavy-tailed limit at the origin")
{
    CHECK(std::fabs(log_pdf(kDrifted, Kernel::CoreAsymptotic, 0.0)
                    - log_pdf(kZero, Kernel::CauchyLimit, 0.0)) <= 1e-14);
    // And carries the radial exponential correction away from it.
    const double n = 30.0;
    const double expected = log_pdf(kZero, Kernel::CauchyLimit, n)
                          + (5.0 / 200.0) * (10.0 - std::hypot(n, 10.0));
    CHECK(std::fabs(log_pdf(kDrifted, Kernel::CoreAsymptotic, n) - expected) <= 1e-13);
    // Without drift the correction vanishes identically.
    CHECK(log_pdf(kZero, Kernel::CoreAsymptotic, n) == log_pdf(kZero, Kernel::CauchyLimit, n));
}

TEST_CASE("tail approximation is anchored to the damped form and tracks it")
{
    // The anchor sits where z = 3: n = (sigma2/v) * sqrt(9 - z0^2).
    const double n_anchor = 40.0 * std::sqrt(9.0 - 0.0625);
    CHECK(std::fabs(pdf(kDrifted, Kernel::TailAsymptotic, n_anchor)
                    / pdf(kDrifted, Kernel::Exact, n_anchor) - 1.0) <= 1e-12);

    // Frozen ratio far out: the power-law prefactor model stays within 8%.
    const double ratio = pdf(kDrifted, Kernel::Exact, 400.0)
                       / pdf(kDrifted, Kernel::TailAsymptotic, 400.0);
    CHECK(std::fabs(ratio - 0.92980371095811554) <= 1e-10);

    // Pure construction identity: f * e^{2z} * s^{3/2} is constant.
    auto invariant = [](double n) {
        const double s = std::hypot(n, 10.0);
        return log_pdf(kDrifted, Kernel::TailAsymptotic, n) + 2.0 * (5.0 * s / 200.0)
             + 1.5 * std::log(s);
    };
    CHECK(std::fabs(invariant(150.0) - invariant(500.0)) <= 1e-10);
}

TEST_CASE("kernels that need drift reject the zero-drift channel")
{
    CHECK_THROWS_AS(log_pdf(kZero, Kernel::Exact, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_pdf(kZero, Kernel::Subordination, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_pdf(kZero, Kernel::TailAsymptotic, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_pdf(kDrifted, Kernel::BivariateCauchy, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_pdf(kDrifted, Kernel::Exact,
                            std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("pdf underflows gracefully deep in the exponential tail")
{
    CHECK(pdf(kDrifted, Kernel::Exact, 1e6) == 0.0);
    CHECK(std::isfinite(log_pdf(kDrifted, Kernel::Exact, 1e6)));
    CHECK(log_pdf(kDrifted, Kernel::Exact, 1e6) < -40000.0);
}

TEST_CASE("planar zero-drift density: value, symmetry, radial survival shape")
{
    CHECK(std::fabs(bivariate_cauchy_pdf(kZero, 0.0, 0.0) - 1.0 / (200.0 * kPi)) <= 1e-18);
    CHECK(bivariate_cauchy_pdf(kZero, 3.0, 4.0) == bivariate_cauchy_pdf(kZero, 4.0, 3.0));
    CHECK(bivariate_cauchy_pdf(kZero, -3.0, 4.0) == bivariate_cauchy_pdf(kZero, 3.0, 4.0));
    const double r = 12.0;
    const double expected = 10.0 / (2.0 * kPi * std::pow(r * r + 100.0, 1.5));
    CHECK(std::fabs(bivariate_cauchy_pdf(kZero, r, 0.0) / expected - 1.0) <= 1e-14);
}
